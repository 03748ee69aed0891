//! Riley polynomials, the cone equation and its roots.

use crate::chebyshev::{poly_S, KnotFamily, RationalPair};
use crate::poly::{BivariatePoly, IntPoly};
use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use thiserror::Error;

/// Proximity to a cleared denominator or an f² = 1 point that marks a root spurious.
pub const SPURIOUS_EPS: f64 = 1e-8;
/// Largest admissible rational residual after polishing.
pub const RESIDUAL_TOL: f64 = 1e-8;
const MAX_NEWTON: usize = 100;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RileyError {
    #[error("polynomial has degree < 1")]
    Degenerate,
    #[error("eigenvalue computation failed for degree {0} companion matrix")]
    Eigen(usize),
    #[error("Newton polishing did not converge near y = {0}")]
    NonConvergence(Complex64),
}

/// A = cot(α/2).
pub fn cone_a(alpha: f64) -> f64 {
    1.0 / (alpha / 2.0).tan()
}

/// u = 2 + (y−2)(y+2−x²)S²_{n−1}(y).
pub fn trace_u(n: i64, x: Complex64, y: Complex64) -> Complex64 {
    let s = crate::chebyshev::eval_S(n - 1, y);
    2.0 + (y - 2.0) * (y + 2.0 - x * x) * s * s
}

/// v = 2 + (z−2)(z+2−x²)S²_{n−1}(z).
pub fn trace_v(n: i64, x: Complex64, z: Complex64) -> Complex64 {
    trace_u(n, x, z)
}

fn ypoly(p: IntPoly) -> BivariatePoly {
    BivariatePoly::from_y(p)
}

fn s_of_y(k: i64) -> BivariatePoly {
    ypoly(poly_S(k).poly)
}

/// (y + 2 − x²) as a bivariate polynomial.
fn y_plus_2_minus_x2() -> BivariatePoly {
    &ypoly(IntPoly::new(vec![2, 1])) - &BivariatePoly::x2()
}

fn trace_poly(n: i64) -> BivariatePoly {
    let s = s_of_y(n - 1);
    let ym2 = ypoly(IntPoly::new(vec![-2, 1]));
    let prod = &(&ym2 * &y_plus_2_minus_x2()) * &(&s * &s);
    &ypoly(IntPoly::constant(2)) + &prod
}

/// Φ for C(2n, 2p+1): (S_n − S_{n−1})S_p(u) − (S_{n−1} − S_{n−2})S_{p−1}(u).
pub fn build_phi_odd(n: i64, p: i64) -> BivariatePoly {
    let u = trace_poly(n);
    let a = &s_of_y(n) - &s_of_y(n - 1);
    let b = &s_of_y(n - 1) - &s_of_y(n - 2);
    let sp = u.compose_into(&poly_S(p).poly);
    let sp1 = u.compose_into(&poly_S(p - 1).poly);
    &(&a * &sp) - &(&b * &sp1)
}

/// Φ for C(2n, 2p): [1 + (z+2−x²)S_{n−1}(S_n − S_{n−1})]S_{p−1}(v) − S_{p−2}(v).
pub fn build_phi_even(n: i64, p: i64) -> BivariatePoly {
    let v = trace_poly(n);
    let s1 = s_of_y(n - 1);
    let inner = &(&y_plus_2_minus_x2() * &s1) * &(&s_of_y(n) - &s1);
    let head = &ypoly(IntPoly::constant(1)) + &inner;
    let sp1 = v.compose_into(&poly_S(p - 1).poly);
    let sp2 = v.compose_into(&poly_S(p - 2).poly);
    &(&head * &sp1) - &sp2
}

/// The holonomy factor −1 + (z+2−x²)S²_{n−1}(z) of the C(2n, −2n) Riley polynomial.
pub fn build_phi_hol_minus2n(n: i64) -> BivariatePoly {
    let s = s_of_y(n - 1);
    &(&y_plus_2_minus_x2() * &(&s * &s)) - &ypoly(IntPoly::constant(1))
}

/// The Riley factor whose zero set matches the cone equation.
pub fn riley_factor(family: KnotFamily, n: i64) -> BivariatePoly {
    match family {
        KnotFamily::C2n3 => build_phi_odd(n, 1),
        KnotFamily::C2n2 => build_phi_even(n, 1),
        KnotFamily::C2nMinus2n => build_phi_hol_minus2n(n),
    }
}

/// Powers of (y−2) and S_{n−1} multiplied through the cone equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClearedFactors {
    pub y_minus_2: u32,
    pub s_prev: u32,
}

impl ClearedFactors {
    pub fn of(family: KnotFamily) -> Self {
        match family {
            KnotFamily::C2n3 => ClearedFactors { y_minus_2: 3, s_prev: 4 },
            KnotFamily::C2n2 => ClearedFactors { y_minus_2: 2, s_prev: 3 },
            KnotFamily::C2nMinus2n => ClearedFactors { y_minus_2: 2, s_prev: 4 },
        }
    }
}

/// Exact parts (P₀, P₁) of the cleared cone equation P₀ + A²P₁ = 0.
pub fn cone_polynomial_exact(family: KnotFamily, n: i64) -> (IntPoly, IntPoly) {
    let s = poly_S(n - 1).poly;
    let sn = poly_S(n).poly;
    let y = IntPoly::monomial(1, 1);
    let ym2 = IntPoly::new(vec![-2, 1]);
    let numf = &sn.scale(2) - &(&y * &s);
    let numf2 = &numf * &numf;
    let diff = &sn - &s;
    let cf = ClearedFactors::of(family);
    let den = &ym2.pow(cf.y_minus_2) * &s.pow(cf.s_prev);
    let (t1, gnum) = match family {
        KnotFamily::C2n3 => (&(&numf2 * &ym2) * &(&s * &s), -&(&diff * &diff)),
        KnotFamily::C2n2 => (&numf2 * &s, -&diff),
        KnotFamily::C2nMinus2n => (&numf2 * &(&s * &s), IntPoly::constant(1)),
    };
    (&t1 - &gnum, &den - &gnum)
}

/// Degree of the cleared cone equation, from the degrees of its defining parts.
pub fn predicted_degree(family: KnotFamily, n: i64) -> usize {
    let m = n.unsigned_abs() as usize;
    match family {
        KnotFamily::C2n3 => 4 * m - 1,
        KnotFamily::C2n2 => 3 * m - 1,
        KnotFamily::C2nMinus2n => 4 * m - 2,
    }
}

/// Why a point of the y-plane is excluded from the genuine root set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExclusionKind {
    YEqualsTwo,
    SPrevZero,
    /// S_{n−1} = S_{n−2}, where f = 1.
    FPlusOne,
    /// S_n = S_{n−1}, where f = −1.
    FMinusOne,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExcludedPoint {
    pub y: Complex64,
    pub kind: ExclusionKind,
}

/// A-independent points that are never genuine roots: y = 2, zeros of S_{n−1}
/// and the points where f² = 1.
pub fn excluded_points(n: i64) -> Vec<ExcludedPoint> {
    let mut out = vec![ExcludedPoint { y: Complex64::new(2.0, 0.0), kind: ExclusionKind::YEqualsTwo }];
    let sets = [
        (poly_S(n - 1).poly, ExclusionKind::SPrevZero),
        (&poly_S(n - 1).poly - &poly_S(n - 2).poly, ExclusionKind::FPlusOne),
        (&poly_S(n).poly - &poly_S(n - 1).poly, ExclusionKind::FMinusOne),
    ];
    for (p, kind) in sets {
        if p.degree().unwrap_or(0) == 0 {
            continue;
        }
        for y in polynomial_roots(&p.to_f64()).unwrap_or_default() {
            out.push(ExcludedPoint { y, kind });
        }
    }
    out
}

const ROOT_SHIFT: f64 = 0.123_456_789;
const SCHUR_MAX_ITER: usize = 1_000;

fn companion_eigenvalues(c: &[f64]) -> Option<Vec<Complex64>> {
    let deg = c.len() - 1;
    let lead = c[deg];
    let mut m = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        m[(i, deg - 1)] = -c[i] / lead;
    }
    let schur = Schur::try_new(m, f64::EPSILON, SCHUR_MAX_ITER)?;
    let roots: Vec<Complex64> = schur.complex_eigenvalues().iter().copied().collect();
    roots.iter().all(|r| r.re.is_finite() && r.im.is_finite()).then_some(roots)
}

/// Coefficients of p(z + d).
fn taylor_shift(c: &[f64], d: f64) -> Vec<f64> {
    let mut out = c.to_vec();
    let n = out.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            out[j] += d * out[j + 1];
        }
    }
    out
}

/// All roots of a real polynomial (coefficient of y^j at index j), by
/// companion-matrix eigenvalues followed by Newton polishing on the polynomial.
pub fn polynomial_roots(coeffs: &[f64]) -> Result<Vec<Complex64>, RileyError> {
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.last() == Some(&0.0) {
        c.pop();
    }
    let deg = c.len().checked_sub(1).filter(|&d| d >= 1).ok_or(RileyError::Degenerate)?;
    let roots = companion_eigenvalues(&c)
        .or_else(|| {
            // Symmetric root sets can stall the Schur iteration; shift y to break the symmetry.
            companion_eigenvalues(&taylor_shift(&c, ROOT_SHIFT))
                .map(|r| r.into_iter().map(|z| z + ROOT_SHIFT).collect())
        })
        .ok_or(RileyError::Eigen(deg))?;
    let mut roots = roots;
    for r in roots.iter_mut() {
        *r = polish_polynomial(&c, *r);
    }
    Ok(roots)
}

fn horner(c: &[f64], y: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        d = d * y + p;
        p = p * y + a;
    }
    (p, d)
}

fn polish_polynomial(c: &[f64], mut y: Complex64) -> Complex64 {
    let (p0, _) = horner(c, y);
    let mut best = (p0.norm(), y);
    for _ in 0..20 {
        let (p, d) = horner(c, y);
        if d.norm() == 0.0 {
            break;
        }
        let step = p / d;
        let next = y - step;
        let (pn, _) = horner(c, next);
        if !(pn.norm() < best.0) {
            break;
        }
        best = (pn.norm(), next);
        y = next;
        if step.norm() <= 4.0 * f64::EPSILON * (1.0 + y.norm()) {
            break;
        }
    }
    let mut r = best.1;
    if r.im.abs() <= 1e-300 {
        r.im = 0.0;
    }
    r
}

/// The cleared cone equation for one (family, n, A).
#[derive(Clone, Debug)]
pub struct ConeEquation {
    pub family: KnotFamily,
    pub n: i64,
    pub a: f64,
    /// Real coefficients, y^j at index j.
    pub poly: Vec<f64>,
    pub spurious_factors: ClearedFactors,
    pub excluded: Vec<ExcludedPoint>,
}

pub fn build_cone_equation(family: KnotFamily, n: i64, a: f64) -> ConeEquation {
    let (p0, p1) = cone_polynomial_exact(family, n);
    let a2 = a * a;
    let len = p0.coeffs().len().max(p1.coeffs().len());
    let poly = (0..len)
        .map(|j| {
            let c0 = p0.coeffs().get(j).copied().unwrap_or(0) as f64;
            let c1 = p1.coeffs().get(j).copied().unwrap_or(0) as f64;
            c0 + a2 * c1
        })
        .collect();
    ConeEquation { family, n, a, poly, spurious_factors: ClearedFactors::of(family), excluded: excluded_points(n) }
}

impl ConeEquation {
    pub fn degree(&self) -> usize {
        self.poly.iter().rposition(|&c| c != 0.0).unwrap_or(0)
    }

    pub fn pair(&self) -> RationalPair {
        RationalPair::new(self.family, self.n)
    }

    /// Distance to the nearest excluded point.
    pub fn exclusion_distance(&self, y: Complex64) -> (f64, Option<ExclusionKind>) {
        self.excluded.iter().map(|e| ((e.y - y).norm(), Some(e.kind))).fold((f64::INFINITY, None), |a, b| {
            if b.0 < a.0 {
                b
            } else {
                a
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConeRoot {
    pub y: Complex64,
    /// |f² + A² − (1+A²)g| after polishing; infinite at poles.
    pub residual: f64,
    pub f: Option<Complex64>,
    pub spurious: bool,
    /// Within 10ε of an excluded point without being spurious.
    pub review: bool,
}

/// Newton on the rational residual. Returns the polished point and residual.
pub fn polish_rational(pair: RationalPair, a: f64, y0: Complex64) -> Result<(Complex64, f64), RileyError> {
    let mut y = y0;
    let mut best = match pair.cone_residual(a, y) {
        Ok(r) => (r.norm(), y),
        Err(_) => return Ok((y, f64::INFINITY)),
    };
    let mut stalls = 0;
    for _ in 0..MAX_NEWTON {
        let (r, dr) = match pair.cone_residual_with_derivative(a, y) {
            Ok(v) => v,
            Err(_) => break,
        };
        if r.norm() == 0.0 || dr.norm() == 0.0 {
            break;
        }
        let step = r / dr;
        if !step.re.is_finite() || !step.im.is_finite() {
            return Err(RileyError::NonConvergence(y0));
        }
        y -= step;
        let rn = pair.cone_residual(a, y).map(|v| v.norm()).unwrap_or(f64::INFINITY);
        if rn < best.0 {
            best = (rn, y);
            stalls = 0;
        } else {
            stalls += 1;
            if stalls >= 3 {
                break;
            }
        }
        if step.norm() <= 4.0 * f64::EPSILON * (1.0 + y.norm()) {
            break;
        }
    }
    if (best.1 - y0).norm() > 1e-3 * (1.0 + y0.norm()) {
        // Newton wandered off; the eigenvalue estimate is the better root.
        let r0 = pair.cone_residual(a, y0).map(|v| v.norm()).unwrap_or(f64::INFINITY);
        return Ok((y0, r0));
    }
    Ok((best.1, best.0))
}

/// All roots of the cone equation with spuriousness flags.
pub fn solve_cone_equation(eq: &ConeEquation) -> Result<Vec<ConeRoot>, RileyError> {
    let pair = eq.pair();
    let raw = polynomial_roots(&eq.poly)?;
    let mut out = Vec::with_capacity(raw.len());
    for y0 in raw {
        let (dist, _) = eq.exclusion_distance(y0);
        let near = dist <= SPURIOUS_EPS;
        let (y, residual) = if near {
            (y0, pair.cone_residual(eq.a, y0).map(|v| v.norm()).unwrap_or(f64::INFINITY))
        } else {
            let (mut y, r) = polish_rational(pair, eq.a, y0)?;
            if y0.im == 0.0 {
                y.im = 0.0;
            }
            (y, r)
        };
        let (dist, _) = eq.exclusion_distance(y);
        let spurious = dist <= SPURIOUS_EPS || !(residual <= RESIDUAL_TOL);
        out.push(ConeRoot {
            y,
            residual,
            f: pair.f(y).ok(),
            spurious,
            review: !spurious && dist <= 10.0 * SPURIOUS_EPS,
        });
    }
    Ok(out)
}

/// Outcome of evaluating Φ and the cone residual at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LemmaCdReport {
    pub phi: f64,
    pub cone: f64,
    pub phi_zero: bool,
    pub cone_zero: bool,
}

impl LemmaCdReport {
    pub fn consistent(&self) -> bool {
        self.phi_zero == self.cone_zero
    }
}

pub fn check_lemma_cd(family: KnotFamily, n: i64, alpha: f64, y: Complex64) -> LemmaCdReport {
    let phi = riley_factor(family, n);
    check_lemma_cd_with(&phi, family, n, alpha, y)
}

/// As [`check_lemma_cd`] with a prebuilt Riley factor.
pub fn check_lemma_cd_with(phi: &BivariatePoly, family: KnotFamily, n: i64, alpha: f64, y: Complex64) -> LemmaCdReport {
    let x = Complex64::new(2.0 * (alpha / 2.0).cos(), 0.0);
    let pv = phi.eval(x, y).norm();
    let cv = RationalPair::new(family, n).cone_residual(cone_a(alpha), y).map(|v| v.norm()).unwrap_or(f64::INFINITY);
    LemmaCdReport { phi: pv, cone: cv, phi_zero: pv <= 1e-8, cone_zero: cv <= 1e-8 }
}

/// Zeros of Φ(2cos(α/2), ·) away from the excluded points, and the genuine
/// roots of the cone equation, with the Hausdorff distance between the two sets.
pub fn lemma_cd_zero_sets(
    family: KnotFamily,
    n: i64,
    alpha: f64,
) -> Result<(Vec<Complex64>, Vec<Complex64>, f64), RileyError> {
    let x = 2.0 * (alpha / 2.0).cos();
    let phi = riley_factor(family, n).at_x2(x * x);
    let eq = build_cone_equation(family, n, cone_a(alpha));
    let phi_roots: Vec<Complex64> =
        polynomial_roots(&phi)?.into_iter().filter(|y| eq.exclusion_distance(*y).0 > SPURIOUS_EPS).collect();
    let cone_roots: Vec<Complex64> =
        solve_cone_equation(&eq)?.into_iter().filter(|r| !r.spurious).map(|r| r.y).collect();
    let one_way = |from: &[Complex64], to: &[Complex64]| {
        from.iter().map(|a| to.iter().map(|b| (a - b).norm()).fold(f64::INFINITY, f64::min)).fold(0.0, f64::max)
    };
    let d = one_way(&phi_roots, &cone_roots).max(one_way(&cone_roots, &phi_roots));
    Ok((phi_roots, cone_roots, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn taylor_shift_matches_evaluation() {
        let c = [1.0, -3.0, 0.5, 2.0];
        let sh = taylor_shift(&c, 0.7);
        for x in [-1.0, 0.0, 0.4, 2.0] {
            let direct: f64 = c.iter().enumerate().map(|(k, a)| a * (x + 0.7f64).powi(k as i32)).sum();
            let shifted: f64 = sh.iter().enumerate().map(|(k, a)| a * x.powi(k as i32)).sum();
            assert!((direct - shifted).abs() < 1e-12);
        }
    }

    #[test]
    fn symmetric_quartic_roots() {
        let mut r: Vec<f64> = polynomial_roots(&[1.0, 0.0, -3.0, 0.0, 1.0]).unwrap().iter().map(|z| z.re).collect();
        r.sort_by(f64::total_cmp);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        for (x, e) in r.iter().zip([-phi, -1.0 / phi, 1.0 / phi, phi]) {
            assert!((x - e).abs() < 1e-12);
        }
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn trace_values() {
        assert_eq!(trace_u(3, c(0.7), c(2.0)), c(2.0));
        assert_eq!(trace_u(1, c(2.0), c(3.0)), c(3.0));
        assert!((trace_u(2, c(1.0), c(2.5)) - 12.9375).norm() < 1e-13);
        assert_eq!(trace_v(4, c(1.1), c(2.0)), c(2.0));
        assert_eq!(trace_v(1, c(0.0), c(3.0)), c(7.0));
        let x = c(2.0 * 0.4f64.cos());
        let z = Complex64::new(0.3, 1.1);
        assert_eq!(trace_v(1, x, z), trace_u(1, x, z));
    }

    #[test]
    fn phi_small_cases() {
        let p = build_phi_odd(1, 0);
        assert_eq!(p, BivariatePoly::from_y(IntPoly::new(vec![-1, 1])));
        // n = p = 1 at x = 0: (y−1)(2+(y−2)(y+2)) − 1 = y³ − y² − 2y + 1.
        let at0 = build_phi_odd(1, 1).at_x2(0.0);
        assert_eq!(at0, vec![1.0, -2.0, -1.0, 1.0]);
        // 1 + (z+2−x²)(z−1)
        let e = build_phi_even(1, 1);
        assert_eq!(e.coeff(0, 0), -1);
        assert_eq!(e.coeff(0, 1), 1);
        assert_eq!(e.coeff(0, 2), 1);
        assert_eq!(e.coeff(1, 0), 1);
        assert_eq!(e.coeff(1, 1), -1);
        assert_eq!(e.at_x2(4.0), vec![3.0, -3.0, 1.0]);
        let h = build_phi_hol_minus2n(1);
        assert_eq!(h.at_x2(4.0), vec![-3.0, 1.0]);
    }

    #[test]
    fn hol_factor_divides_trace_difference() {
        for n in -4..=4 {
            if n == 0 {
                continue;
            }
            let v = trace_poly(n);
            let z = BivariatePoly::from_y(IntPoly::monomial(1, 1));
            let zm2 = BivariatePoly::from_y(IntPoly::new(vec![-2, 1]));
            assert_eq!(&v - &z, &zm2 * &build_phi_hol_minus2n(n), "n = {n}");
        }
    }

    #[test]
    fn cone_equation_examples() {
        let eq = build_cone_equation(KnotFamily::C2n2, 1, 0.0);
        let lead = eq.poly[eq.degree()];
        let norm: Vec<f64> = eq.poly.iter().map(|c| c / lead).collect();
        assert_eq!(norm, vec![-1.0, 1.0, 1.0]);
        let eq = build_cone_equation(KnotFamily::C2nMinus2n, 1, 0.0);
        // f₁² = y²/(y−2)² and g₁ = 1/(y−2)², so the cleared equation is y² − 1.
        assert_eq!(eq.poly, vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn synthetic_roots() {
        // (y²−2y+2)(y+1) = y³ − y² + 2
        let mut r = polynomial_roots(&[2.0, 0.0, -1.0, 1.0]).unwrap();
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
        let want = [c(-1.0), Complex64::new(1.0, -1.0), Complex64::new(1.0, 1.0)];
        for (a, b) in r.iter().zip(want) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn figure_eight_at_pi() {
        let eq = build_cone_equation(KnotFamily::C2n2, 1, 0.0);
        let mut ys: Vec<f64> =
            solve_cone_equation(&eq).unwrap().iter().filter(|r| !r.spurious).map(|r| r.y.re).collect();
        ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let s5 = 5f64.sqrt();
        assert!((ys[0] - (-1.0 - s5) / 2.0).abs() < 1e-12);
        assert!((ys[1] - (-1.0 + s5) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn residuals_small_at_roots() {
        let eq = build_cone_equation(KnotFamily::C2n2, 1, cone_a(0.5));
        for r in solve_cone_equation(&eq).unwrap() {
            assert!(r.residual <= 1e-8);
        }
    }

    #[test]
    fn spurious_f_equals_one_points() {
        // C(2n,−2n), n = 1: y = 1 solves the cleared equation for all A.
        let eq = build_cone_equation(KnotFamily::C2nMinus2n, 1, cone_a(1.3));
        let roots = solve_cone_equation(&eq).unwrap();
        assert!(roots.iter().any(|r| r.spurious && (r.y - 1.0).norm() < 1e-6));
    }

    #[test]
    fn lemma_cd_at_and_off_roots() {
        let alpha = 1.1;
        for fam in KnotFamily::ALL {
            let eq = build_cone_equation(fam, 2, cone_a(alpha));
            for r in solve_cone_equation(&eq).unwrap().iter().filter(|r| !r.spurious) {
                let at = check_lemma_cd(fam, 2, alpha, r.y);
                assert!(at.phi_zero && at.cone_zero, "{fam} {at:?}");
                let off = check_lemma_cd(fam, 2, alpha, r.y + 0.1);
                assert!(off.phi > 1e-4 && off.cone > 1e-4, "{fam} {off:?}");
            }
        }
    }

    #[test]
    fn degrees_match_prediction() {
        for fam in KnotFamily::ALL {
            for n in [-4i64, -3, -2, -1, 1, 2, 3, 4] {
                let eq = build_cone_equation(fam, n, 0.7);
                assert_eq!(eq.degree(), predicted_degree(fam, n), "{fam} {n}");
            }
        }
    }
}
