//! Exact integer polynomials in one variable and in (x², y).
//!
//! Coefficients are `i128`; every operation is overflow-checked and panics
//! with a descriptive message if the supported range is exceeded.

use num_complex::Complex64;
use std::ops::{Add, Mul, Neg, Sub};

fn ck_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

fn ck_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

/// Univariate polynomial, coefficient of `y^j` at index `j`. No trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct IntPoly {
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i128) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial `c·y^k`.
    pub fn monomial(c: i128, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i128) -> Self {
        IntPoly::new(self.coeffs.iter().map(|&a| ck_mul(a, c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = IntPoly::constant(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(j, &c)| ck_mul(c, j as i128)).collect())
    }

    /// Exact division by a monic or unit-leading divisor; `None` if it leaves a remainder.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Some(IntPoly::zero()) } else { None };
        }
        let mut q = vec![0i128; rem.len() - dd];
        for i in (0..q.len()).rev() {
            let top = rem[i + dd];
            if top % lead != 0 {
                return None;
            }
            let c = top / lead;
            q[i] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = ck_add(rem[i + j], -ck_mul(c, dc));
            }
        }
        if rem.iter().all(|&r| r == 0) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    pub fn eval_f64(&self, y: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * y + c as f64)
    }

    pub fn eval(&self, y: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * y + c as f64)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|&c| c as f64).collect()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..len)
            .map(|j| ck_add(self.coeffs.get(j).copied().unwrap_or(0), rhs.coeffs.get(j).copied().unwrap_or(0)))
            .collect();
        IntPoly::new(v)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = ck_add(v[i + j], ck_mul(a, b));
            }
        }
        IntPoly::new(v)
    }
}

/// Polynomial in (x², y): entry `k` of `slices` is the coefficient polynomial
/// in y of `(x²)^k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    slices: Vec<IntPoly>,
}

impl BivariatePoly {
    pub fn new(mut slices: Vec<IntPoly>) -> Self {
        while slices.last().is_some_and(IntPoly::is_zero) {
            slices.pop();
        }
        BivariatePoly { slices }
    }

    pub fn zero() -> Self {
        BivariatePoly { slices: Vec::new() }
    }

    pub fn from_y(p: IntPoly) -> Self {
        BivariatePoly::new(vec![p])
    }

    /// The polynomial `x²`.
    pub fn x2() -> Self {
        BivariatePoly::new(vec![IntPoly::zero(), IntPoly::constant(1)])
    }

    pub fn slices(&self) -> &[IntPoly] {
        &self.slices
    }

    /// Coefficient of `(x²)^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> i128 {
        self.slices.get(i).and_then(|p| p.coeffs().get(j)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.slices.is_empty()
    }

    /// Specialise x² to a number, leaving a polynomial in y (real coefficients).
    pub fn at_x2(&self, x2: f64) -> Vec<f64> {
        let len = self.slices.iter().map(|s| s.coeffs().len()).max().unwrap_or(0);
        let mut out = vec![0.0; len];
        let mut pw = 1.0;
        for s in &self.slices {
            for (j, &c) in s.coeffs().iter().enumerate() {
                out[j] += c as f64 * pw;
            }
            pw *= x2;
        }
        out
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        let x2 = x * x;
        self.slices.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, s| acc * x2 + s.eval(y))
    }

    /// Substitute `self` into a univariate polynomial: returns `q(self)`.
    pub fn compose_into(&self, q: &IntPoly) -> BivariatePoly {
        q.coeffs()
            .iter()
            .rev()
            .fold(BivariatePoly::zero(), |acc, &c| &(&acc * self) + &BivariatePoly::from_y(IntPoly::constant(c)))
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let len = self.slices.len().max(rhs.slices.len());
        let zero = IntPoly::zero();
        BivariatePoly::new(
            (0..len).map(|k| self.slices.get(k).unwrap_or(&zero) + rhs.slices.get(k).unwrap_or(&zero)).collect(),
        )
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly::new(self.slices.iter().map(|s| -s).collect())
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        self + &(-rhs)
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        if self.is_zero() || rhs.is_zero() {
            return BivariatePoly::zero();
        }
        let mut v = vec![IntPoly::zero(); self.slices.len() + rhs.slices.len() - 1];
        for (i, a) in self.slices.iter().enumerate() {
            for (j, b) in rhs.slices.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        BivariatePoly::new(v)
    }
}
