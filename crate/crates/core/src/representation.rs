//! SL(2,ℂ) holonomy oracle: matrices, words, relation residuals and the
//! longitude eigenvalue, computed independently of the Chebyshev shortcuts.

use crate::chebyshev::{eval_S, eval_f, KnotFamily, PoleError};
use crate::riley::{trace_u, trace_v};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::ops::{Mul, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RepresentationError {
    #[error("degenerate longitude: |W12| = {0:e}")]
    DegenerateLongitude(f64),
    #[error("no arccoth branch gives a positive real length (got {0})")]
    BranchFailure(Complex64),
    #[error(transparent)]
    Pole(#[from] PoleError),
}

/// A 2×2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [Complex64; 4]);

impl Mat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2([a, b, c, d])
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Mat2([one, zero, zero, one])
    }

    pub fn det(&self) -> Complex64 {
        let [a, b, c, d] = self.0;
        a * d - b * c
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0] + self.0[3]
    }

    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = self.0;
        let det = self.det();
        Mat2([d / det, -b / det, -c / det, a / det])
    }

    pub fn frobenius(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Integer power by repeated squaring; negative exponents use the inverse.
    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inverse() } else { *self };
        let mut k = e.unsigned_abs();
        let mut acc = Mat2::identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.0[2 * i + j]
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, r: Mat2) -> Mat2 {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = r.0;
        Mat2([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, r: Mat2) -> Mat2 {
        let mut out = self.0;
        for (o, x) in out.iter_mut().zip(r.0) {
            *o -= x;
        }
        Mat2(out)
    }
}

/// ρ(a) and ρ(b) with tr(AB) = t (odd families) or tr(AB⁻¹) = t (even families).
pub fn build_matrices(family: KnotFamily, m: Complex64, t: Complex64) -> (Mat2, Mat2) {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mi = m.inv();
    let a = Mat2::new(m, one, zero, mi);
    let lower = if family.is_odd() { t - m * m - mi * mi } else { 2.0 - t };
    let b = Mat2::new(m, zero, lower, mi);
    (a, b)
}

/// ω = (ab)ⁿ[(a⁻¹b⁻¹)ⁿ(ab)ⁿ]ᵖ.
pub fn word_omega_odd(n: i64, p: i64, a: &Mat2, b: &Mat2) -> Mat2 {
    let ab = (*a * *b).pow(n);
    let inner = (a.inverse() * b.inverse()).pow(n) * ab;
    ab * inner.pow(p)
}

/// The block (a⁻¹b⁻¹)ⁿ(ab)ⁿ whose trace is u.
pub fn inner_block_odd(n: i64, a: &Mat2, b: &Mat2) -> Mat2 {
    (a.inverse() * b.inverse()).pow(n) * (*a * *b).pow(n)
}

/// ω′ = [(a⁻¹b)ⁿ(ab⁻¹)ⁿ]ᵖ.
pub fn word_omega_even(n: i64, p: i64, a: &Mat2, b: &Mat2) -> Mat2 {
    inner_block_even(n, a, b).pow(p)
}

/// The block (a⁻¹b)ⁿ(ab⁻¹)ⁿ whose trace is v.
pub fn inner_block_even(n: i64, a: &Mat2, b: &Mat2) -> Mat2 {
    (a.inverse() * *b).pow(n) * (*a * b.inverse()).pow(n)
}

fn word(family: KnotFamily, n: i64, p: i64, m: Complex64, t: Complex64) -> (Mat2, Mat2, Mat2) {
    let (a, b) = build_matrices(family, m, t);
    let w = if family.is_odd() { word_omega_odd(n, p, &a, &b) } else { word_omega_even(n, p, &a, &b) };
    (a, b, w)
}

/// Frobenius norm of ρ(ωa) − ρ(bω).
pub fn relation_residual(family: KnotFamily, n: i64, p: i64, m: Complex64, t: Complex64) -> f64 {
    let (a, b, w) = word(family, n, p, m, t);
    (w * a - b * w).frobenius()
}

/// The full residual matrix ρ(ωa) − ρ(bω).
pub fn relation_matrix(family: KnotFamily, n: i64, p: i64, m: Complex64, t: Complex64) -> Mat2 {
    let (a, b, w) = word(family, n, p, m, t);
    w * a - b * w
}

/// Upper-right entry of the word.
pub fn word_w12(family: KnotFamily, n: i64, p: i64, m: Complex64, t: Complex64) -> Complex64 {
    word(family, n, p, m, t).2.entry(0, 1)
}

/// Closed form of W₁₂ (odd) or W′₁₂ (even), valid at Riley roots.
pub fn w12_closed_form(family: KnotFamily, n: i64, p: i64, m: Complex64, t: Complex64) -> Complex64 {
    let mi = m.inv();
    let x = m + mi;
    let sn = eval_S(n, t);
    let s1 = eval_S(n - 1, t);
    let s2 = eval_S(n - 2, t);
    if family.is_odd() {
        let u = trace_u(n, x, t);
        (mi - m * (sn - s1) / (s1 - s2)) * eval_S(p, u) * s1
    } else {
        let v = trace_v(n, x, t);
        (m * (sn - s1) - mi * (s1 - s2)) * s1 * eval_S(p - 1, v)
    }
}

/// ℓ = −W̃₁₂/W₁₂ with W̃ rebuilt at m⁻¹; odd families carry the m^{4n} factor.
pub fn longitude_eigenvalue(
    family: KnotFamily,
    n: i64,
    p: i64,
    m: Complex64,
    t: Complex64,
) -> Result<Complex64, RepresentationError> {
    let w = word_w12(family, n, p, m, t);
    if w.norm() <= 1e-12 {
        return Err(RepresentationError::DegenerateLongitude(w.norm()));
    }
    let wt = word_w12(family, n, p, m.inv(), t);
    Ok(-wt / w)
}

/// −(ℓ^½+ℓ^−½)/(ℓ^½−ℓ^−½) · (m+m⁻¹)/(m−m⁻¹); independent of the square-root branch.
pub fn f_from_longitude(ell: Complex64, m: Complex64) -> Complex64 {
    let s = ell.sqrt();
    let si = s.inv();
    -(s + si) / (s - si) * (m + m.inv()) / (m - m.inv())
}

/// Meridian eigenvalue e^{iα/2}.
pub fn meridian(alpha: f64) -> Complex64 {
    Complex64::from_polar(1.0, alpha / 2.0)
}

fn wrap_4pi(mut g: Complex64) -> Complex64 {
    g.im = (g.im + 2.0 * PI).rem_euclid(4.0 * PI) - 2.0 * PI;
    g
}

/// γ_α = 4·arccoth(−i f tan(α/2)), shifted by −4niα for odd families, with
/// Im γ ∈ [−2π, 2π) and Re γ > 0 required.
pub fn complex_length(family: KnotFamily, n: i64, alpha: f64, y0: Complex64) -> Result<Complex64, RepresentationError> {
    let f = eval_f(n, y0)?;
    let t = -Complex64::i() * f * (alpha / 2.0).tan();
    let g = 2.0 * ((t + 1.0) / (t - 1.0)).ln();
    let shift = if family.is_odd() { Complex64::new(0.0, -4.0 * n as f64 * alpha) } else { Complex64::new(0.0, 0.0) };
    let g = wrap_4pi(g + shift);
    if g.re > 0.0 {
        Ok(g)
    } else {
        Err(RepresentationError::BranchFailure(g))
    }
}

/// Real length l_α = 2 log|(t+1)/(t−1)|, t = −i f(y₀) tan(α/2).
pub fn hyperbolic_length(n: i64, alpha: f64, y0: Complex64) -> Result<f64, PoleError> {
    let f = eval_f(n, y0)?;
    let t = -Complex64::i() * f * (alpha / 2.0).tan();
    Ok(2.0 * ((t + 1.0) / (t - 1.0)).norm().ln())
}

/// The holonomy data of one root.
#[derive(Clone, Debug)]
pub struct HolonomyData {
    pub family: KnotFamily,
    pub n: i64,
    pub p: i64,
    pub m: Complex64,
    pub y_or_z: Complex64,
    pub a: Mat2,
    pub b: Mat2,
    pub relation_residual: f64,
    pub longitude_eigenvalue: Complex64,
    pub complex_length: Option<Complex64>,
}

pub fn holonomy(family: KnotFamily, n: i64, alpha: f64, t: Complex64) -> Result<HolonomyData, RepresentationError> {
    let p = family.word_exponent(n);
    let m = meridian(alpha);
    let (a, b) = build_matrices(family, m, t);
    let ell = longitude_eigenvalue(family, n, p, m, t)?;
    Ok(HolonomyData {
        family,
        n,
        p,
        m,
        y_or_z: t,
        a,
        b,
        relation_residual: relation_residual(family, n, p, m, t),
        longitude_eigenvalue: ell,
        complex_length: complex_length(family, n, alpha, t).ok(),
    })
}
