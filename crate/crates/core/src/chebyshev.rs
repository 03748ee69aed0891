//! Chebyshev polynomials of the second kind and the rational functions f_n, g_n.

use crate::poly::IntPoly;
use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Default relative threshold below which a denominator counts as a pole.
pub const POLE_GUARD: f64 = 1e-14;

#[derive(Debug, Error, Clone, PartialEq)]
#[error("pole: denominator {denominator:e} is negligible against numerator {numerator:e} at y = {y}")]
pub struct PoleError {
    pub y: Complex64,
    pub numerator: f64,
    pub denominator: f64,
}

/// The three two-bridge knot families handled by the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnotFamily {
    /// C(2n, 2): twist knots.
    C2n2,
    /// C(2n, 3).
    C2n3,
    /// C(2n, −2n).
    C2nMinus2n,
}

impl KnotFamily {
    pub const ALL: [KnotFamily; 3] = [KnotFamily::C2n2, KnotFamily::C2n3, KnotFamily::C2nMinus2n];

    pub fn token(self) -> &'static str {
        match self {
            KnotFamily::C2n2 => "c2n2",
            KnotFamily::C2n3 => "c2n3",
            KnotFamily::C2nMinus2n => "c2nm2n",
        }
    }

    /// Whether the knot is C(2n, 2p+1) (odd) rather than C(2n, 2p).
    pub fn is_odd(self) -> bool {
        matches!(self, KnotFamily::C2n3)
    }

    /// The exponent p of the defining word for twist parameter n.
    pub fn word_exponent(self, n: i64) -> i64 {
        match self {
            KnotFamily::C2n2 | KnotFamily::C2n3 => 1,
            KnotFamily::C2nMinus2n => -n,
        }
    }
}

impl fmt::Display for KnotFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for KnotFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "c2n2" => Ok(KnotFamily::C2n2),
            "c2n3" => Ok(KnotFamily::C2n3),
            "c2nm2n" => Ok(KnotFamily::C2nMinus2n),
            other => Err(format!("unknown family `{other}` (expected c2n2, c2n3 or c2nm2n)")),
        }
    }
}

/// Returns (S_k, S_{k−1}, S′_k, S′_{k−1}) at y.
fn run(k: i64, y: Complex64) -> (Complex64, Complex64, Complex64, Complex64) {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    // state holds (S_j, S_{j−1}) and derivatives, starting at j = 0.
    let (mut s, mut sm, mut d, mut dm) = (one, zero, zero, zero);
    if k >= 0 {
        for _ in 0..k {
            let sn = y * s - sm;
            let dn = s + y * d - dm;
            sm = s;
            dm = d;
            s = sn;
            d = dn;
        }
    } else {
        for _ in 0..(-k) {
            // S_{j−2} = y S_{j−1} − S_j
            let sp = y * sm - s;
            let dp = sm + y * dm - d;
            s = sm;
            d = dm;
            sm = sp;
            dm = dp;
        }
    }
    (s, sm, d, dm)
}

/// S_k(y) by the three-term recurrence.
#[allow(non_snake_case)]
pub fn eval_S(k: i64, y: Complex64) -> Complex64 {
    run(k, y).0
}

/// Residual of S²_k − yS_kS_{k−1} + S²_{k−1} = 1, scaled by the size of the terms.
pub fn pell_residual(k: i64, y: Complex64) -> f64 {
    let a = eval_S(k, y);
    let b = eval_S(k - 1, y);
    let terms = [a * a, -(y * a * b), b * b];
    let scale = terms.iter().map(|t| t.norm()).sum::<f64>().max(1.0);
    (terms.iter().sum::<Complex64>() - 1.0).norm() / scale
}

/// d/dy S_k(y) by the differentiated recurrence.
#[allow(non_snake_case)]
pub fn eval_S_prime(k: i64, y: Complex64) -> Complex64 {
    run(k, y).2
}

/// S_k with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebyshevPoly {
    pub index: i64,
    pub poly: IntPoly,
}

/// S_k as an exact polynomial.
#[allow(non_snake_case)]
pub fn poly_S(k: i64) -> ChebyshevPoly {
    let y = IntPoly::monomial(1, 1);
    let (mut s, mut sm) = (IntPoly::constant(1), IntPoly::zero());
    if k >= 0 {
        for _ in 0..k {
            let sn = &(&y * &s) - &sm;
            sm = s;
            s = sn;
        }
    } else {
        for _ in 0..(-k) {
            let sp = &(&y * &sm) - &s;
            s = sm;
            sm = sp;
        }
    }
    ChebyshevPoly { index: k, poly: s }
}

/// S_n, S_{n−1}, S_{n−2} and their derivatives at one point.
#[derive(Clone, Copy, Debug)]
pub struct ChebyshevContext {
    pub y: Complex64,
    pub s: [Complex64; 3],
    pub ds: [Complex64; 3],
}

impl ChebyshevContext {
    pub fn new(n: i64, y: Complex64) -> Self {
        let (s0, s1, d0, d1) = run(n, y);
        let s2 = y * s1 - s0;
        let d2 = s1 + y * d1 - d0;
        ChebyshevContext { y, s: [s0, s1, s2], ds: [d0, d1, d2] }
    }

    fn f_parts(&self) -> (Complex64, Complex64, Complex64, Complex64) {
        let y = self.y;
        let [sn, s1, _] = self.s;
        let [dn, d1, _] = self.ds;
        let num = 2.0 * sn - y * s1;
        let den = (y - 2.0) * s1;
        let dnum = 2.0 * dn - s1 - y * d1;
        let dden = s1 + (y - 2.0) * d1;
        (num, den, dnum, dden)
    }

    fn g_parts(&self, family: KnotFamily) -> (Complex64, Complex64, Complex64, Complex64) {
        let t = self.y - 2.0;
        let [sn, s1, _] = self.s;
        let [dn, d1, _] = self.ds;
        let p = sn - s1;
        let dp = dn - d1;
        match family {
            KnotFamily::C2n3 => (
                -p * p,
                t * t * t * s1.powi(4),
                -2.0 * p * dp,
                3.0 * t * t * s1.powi(4) + 4.0 * t * t * t * s1.powi(3) * d1,
            ),
            KnotFamily::C2n2 => (-p, t * t * s1.powi(3), -dp, 2.0 * t * s1.powi(3) + 3.0 * t * t * s1 * s1 * d1),
            KnotFamily::C2nMinus2n => (
                Complex64::new(1.0, 0.0),
                t * t * s1.powi(4),
                Complex64::new(0.0, 0.0),
                2.0 * t * s1.powi(4) + 4.0 * t * t * s1.powi(3) * d1,
            ),
        }
    }

    pub fn f(&self) -> Result<Complex64, PoleError> {
        let (num, den, _, _) = self.f_parts();
        guard(self.y, num, den)?;
        Ok(num / den)
    }

    pub fn f_prime(&self) -> Result<Complex64, PoleError> {
        let (num, den, dnum, dden) = self.f_parts();
        guard(self.y, num, den)?;
        Ok((dnum * den - num * dden) / (den * den))
    }

    pub fn g(&self, family: KnotFamily) -> Result<Complex64, PoleError> {
        let (num, den, _, _) = self.g_parts(family);
        guard(self.y, num, den)?;
        Ok(num / den)
    }

    pub fn g_prime(&self, family: KnotFamily) -> Result<Complex64, PoleError> {
        let (num, den, dnum, dden) = self.g_parts(family);
        guard(self.y, num, den)?;
        Ok((dnum * den - num * dden) / (den * den))
    }
}

fn guard(y: Complex64, num: Complex64, den: Complex64) -> Result<(), PoleError> {
    let (a, b) = (num.norm(), den.norm());
    if b == 0.0 || b <= POLE_GUARD * a {
        Err(PoleError { y, numerator: a, denominator: b })
    } else {
        Ok(())
    }
}

/// f_n(y) = (2S_n − yS_{n−1}) / ((y−2)S_{n−1}).
pub fn eval_f(n: i64, y: Complex64) -> Result<Complex64, PoleError> {
    ChebyshevContext::new(n, y).f()
}

pub fn eval_f_prime(n: i64, y: Complex64) -> Result<Complex64, PoleError> {
    ChebyshevContext::new(n, y).f_prime()
}

/// The family-specific g_n(y).
pub fn eval_g(family: KnotFamily, n: i64, y: Complex64) -> Result<Complex64, PoleError> {
    ChebyshevContext::new(n, y).g(family)
}

pub fn eval_g_prime(family: KnotFamily, n: i64, y: Complex64) -> Result<Complex64, PoleError> {
    ChebyshevContext::new(n, y).g_prime(family)
}

/// f_n and g_n for one (family, n), evaluable at complex arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RationalPair {
    pub family: KnotFamily,
    pub n: i64,
}

impl RationalPair {
    pub fn new(family: KnotFamily, n: i64) -> Self {
        RationalPair { family, n }
    }

    pub fn context(&self, y: Complex64) -> ChebyshevContext {
        ChebyshevContext::new(self.n, y)
    }

    pub fn f(&self, y: Complex64) -> Result<Complex64, PoleError> {
        eval_f(self.n, y)
    }

    pub fn g(&self, y: Complex64) -> Result<Complex64, PoleError> {
        eval_g(self.family, self.n, y)
    }

    /// f² + A² − (1+A²)g.
    pub fn cone_residual(&self, a: f64, y: Complex64) -> Result<Complex64, PoleError> {
        let cx = self.context(y);
        let f = cx.f()?;
        let g = cx.g(self.family)?;
        let a2 = a * a;
        Ok(f * f + a2 - (1.0 + a2) * g)
    }

    /// The cone residual and its y-derivative.
    pub fn cone_residual_with_derivative(&self, a: f64, y: Complex64) -> Result<(Complex64, Complex64), PoleError> {
        let cx = self.context(y);
        let f = cx.f()?;
        let df = cx.f_prime()?;
        let g = cx.g(self.family)?;
        let dg = cx.g_prime(self.family)?;
        let a2 = a * a;
        Ok((f * f + a2 - (1.0 + a2) * g, 2.0 * f * df - (1.0 + a2) * dg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn base_cases_and_values() {
        assert_eq!(eval_S(0, Complex64::new(0.3, -1.2)), c(1.0));
        assert_eq!(eval_S(3, c(2.0)), c(4.0));
        let y = c(2.0 * (PI / 7.0).cos());
        let expect = (6.0 * PI / 7.0).sin() / (PI / 7.0).sin();
        assert!((eval_S(5, y) - expect).norm() < 1e-13);
        assert_eq!(eval_S(-1, c(1.7)), c(0.0));
        assert_eq!(eval_S(-2, c(1.7)), c(-1.0));
    }

    #[test]
    fn derivative_values() {
        assert_eq!(eval_S_prime(1, c(0.4)), c(1.0));
        assert_eq!(eval_S_prime(2, c(3.0)), c(6.0));
        let h = 1e-6;
        let fd = (eval_S(4, c(1.5 + h)) - eval_S(4, c(1.5 - h))) / (2.0 * h);
        let d = eval_S_prime(4, c(1.5));
        assert!((fd - d).norm() <= 1e-6 * d.norm());
    }

    #[test]
    fn exact_polynomials() {
        assert_eq!(poly_S(2).poly.coeffs(), &[-1, 0, 1]);
        assert!(poly_S(-1).poly.is_zero());
        assert_eq!(poly_S(-2).poly.coeffs(), &[-1]);
        assert_eq!(poly_S(4).poly.coeffs(), &[1, 0, -3, 0, 1]);
    }

    #[test]
    fn f_values() {
        assert!((eval_f(1, c(4.0)).unwrap() - 2.0).norm() < 1e-15);
        assert!(eval_f(1, c(2.0)).is_err());
        assert!((eval_f(2, c(1.0)).unwrap() - 1.0).norm() < 1e-15);
        assert!((eval_f_prime(1, c(4.0)).unwrap() + 0.5).norm() < 1e-15);
        assert!((eval_f_prime(1, c(3.0)).unwrap() + 2.0).norm() < 1e-15);
        let y = Complex64::new(1.0, 0.5);
        let h = 1e-6;
        let fd = (eval_f(2, y + h).unwrap() - eval_f(2, y - h).unwrap()) / (2.0 * h);
        let d = eval_f_prime(2, y).unwrap();
        assert!((fd - d).norm() <= 1e-6 * d.norm());
    }

    #[test]
    fn g_values() {
        assert!((eval_g(KnotFamily::C2n2, 1, c(3.0)).unwrap() + 2.0).norm() < 1e-15);
        assert!((eval_g(KnotFamily::C2nMinus2n, 1, c(3.0)).unwrap() - 1.0).norm() < 1e-15);
        assert!((eval_g(KnotFamily::C2n3, 1, c(4.0)).unwrap() + 9.0 / 8.0).norm() < 1e-15);
        assert!(eval_g(KnotFamily::C2n3, 2, c(0.0)).is_err());
    }

    #[test]
    fn g_prime_matches_difference() {
        let y = Complex64::new(0.7, 0.4);
        let h = 1e-6;
        for fam in KnotFamily::ALL {
            for n in [-3, -1, 1, 2, 3] {
                let fd = (eval_g(fam, n, y + h).unwrap() - eval_g(fam, n, y - h).unwrap()) / (2.0 * h);
                let d = eval_g_prime(fam, n, y).unwrap();
                assert!((fd - d).norm() <= 1e-5 * d.norm().max(1.0), "{fam} {n}");
            }
        }
    }

    #[test]
    fn family_tokens_round_trip() {
        for fam in KnotFamily::ALL {
            assert_eq!(fam.token().parse::<KnotFamily>().unwrap(), fam);
        }
        assert!("c2n4".parse::<KnotFamily>().is_err());
    }
}
