//! Volumes from the contour integrals of log((f²+A²)/((1+A²)g))·f′/(f²−1),
//! and the Schläfli-integral oracle.
//!
//! Hyperbolic contour: the conjugate root trajectory from ȳ₀(α) to the
//! collision point y_c, then the trajectory back up to y₀(α). The logarithm is
//! continued along the path from 0 at the start; it ends at 2πik. Each winding
//! around a zero of f²+A² shifts the real part of the integral by a closed-form
//! amount, π·k·log|(f₀−1)/(f₀+1)| with f₀ = f(y₀), which is added back.
//!
//! Spherical contour: the real segment y₊ → y₋, on which the log argument is positive.

use crate::chebyshev::{poly_S, ChebyshevContext, KnotFamily, PoleError, RationalPair};
use crate::geometry::{
    classify, geometric_branch, regime_of, spherical_length, ConeManifoldSpec, GeometricBranch, GeometryError, Regime,
    SelectedRoots,
};
use crate::poly::IntPoly;
use crate::quadrature::{integrate, integrate_real, AnchoredIntegrand, QuadOutcome, Values};
use crate::representation::hyperbolic_length;
use crate::riley::{cone_a, excluded_points, polynomial_roots, ExclusionKind, RileyError};
use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

pub const R_EXCL: f64 = 1e-4;
pub const DEFAULT_TOL_QUAD: f64 = 1e-9;
pub const MAX_SUBDIVISIONS: usize = 2000;
/// Within this distance of α_K the contour endpoints nearly merge and the
/// Schläfli integral is used instead.
pub const TRANSITION_BAND: f64 = 1e-3;
/// Largest admissible imaginary part of a volume integral.
pub const IMAG_TOL: f64 = 1e-7;
const MAX_ARG_STEP: f64 = PI / 4.0;
const BRANCH_JUMP: f64 = 0.75 * PI;
/// Below this s = √|β − α_K| the length is not resolved and is taken as 0;
/// the neglected Schläfli contribution is O(s³) < 1e−14.
const S_UNRESOLVED: f64 = 1e-5;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VolumeError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Pole(#[from] PoleError),
    #[error(transparent)]
    Riley(#[from] RileyError),
    #[error("integration path blocked by a singularity at {0}")]
    PathBlocked(Complex64),
    #[error("quadrature tolerance not met: error estimate {0:e}")]
    QuadratureFailure(f64),
    #[error("log branch jumped by more than 3π/4 at y = {0}")]
    BranchJump(Complex64),
    #[error("volume integral is not real: imaginary residual {0:e}")]
    NotReal(f64),
    #[error("spherical pair orientation gives a negative volume {0}")]
    Orientation(f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VolumeOptions {
    pub tol_quad: f64,
    pub max_subdivisions: usize,
    pub r_excl: f64,
    pub cross_check: bool,
    /// Displacement of the middle control point of the hyperbolic path.
    pub control_offset: Complex64,
}

impl Default for VolumeOptions {
    fn default() -> Self {
        VolumeOptions {
            tol_quad: DEFAULT_TOL_QUAD,
            max_subdivisions: MAX_SUBDIVISIONS,
            r_excl: R_EXCL,
            cross_check: false,
            control_offset: Complex64::new(0.0, 0.0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VolumeMethod {
    Contour,
    Schlafli,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Diagnostics {
    pub root_residual: f64,
    pub path_segments: usize,
    pub deformations: usize,
    pub intervals: usize,
    pub evaluations: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VolumeResult {
    pub spec: ConeManifoldSpec,
    pub regime: Regime,
    pub volume: f64,
    pub error_estimate: f64,
    pub imaginary_residual: f64,
    pub branch_windings: i64,
    pub winding_correction: f64,
    pub schlafli_volume: Option<f64>,
    pub alpha_k: f64,
    pub l_alpha: f64,
    pub method: VolumeMethod,
    pub diagnostics: Diagnostics,
}

/// One piece of an integration path.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Segment {
    Line { a: Complex64, b: Complex64 },
    Arc { center: Complex64, radius: f64, theta0: f64, theta1: f64 },
}

impl Segment {
    fn point(&self, tau: f64) -> (Complex64, Complex64) {
        match *self {
            Segment::Line { a, b } => (a + (b - a) * tau, b - a),
            Segment::Arc { center, radius, theta0, theta1 } => {
                let th = theta0 + (theta1 - theta0) * tau;
                let e = Complex64::from_polar(radius, th);
                (center + e, Complex64::i() * e * (theta1 - theta0))
            }
        }
    }

    fn start(&self) -> Complex64 {
        self.point(0.0).0
    }

    fn end(&self) -> Complex64 {
        self.point(1.0).0
    }

    /// Distance from `z` to the segment.
    fn distance(&self, z: Complex64) -> f64 {
        match *self {
            Segment::Line { a, b } => {
                let d = b - a;
                let t = if d.norm_sqr() == 0.0 { 0.0 } else { ((z - a) * d.conj()).re / d.norm_sqr() };
                (a + d * t.clamp(0.0, 1.0) - z).norm()
            }
            Segment::Arc { .. } => {
                (0..=64).map(|k| (self.point(k as f64 / 64.0).0 - z).norm()).fold(f64::INFINITY, f64::min)
            }
        }
    }
}

/// A connected chain of segments; parameter t ∈ [i, i+1] covers segment i.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegrationPath {
    pub segments: Vec<Segment>,
}

impl IntegrationPath {
    pub fn polyline(vertices: &[Complex64]) -> Self {
        IntegrationPath { segments: vertices.windows(2).map(|w| Segment::Line { a: w[0], b: w[1] }).collect() }
    }

    pub fn point(&self, t: f64) -> (Complex64, Complex64) {
        let last = self.segments.len() - 1;
        let i = (t.floor().max(0.0) as usize).min(last);
        self.segments[i].point(t - i as f64)
    }

    pub fn start(&self) -> Complex64 {
        self.segments[0].start()
    }

    pub fn end(&self) -> Complex64 {
        self.segments[self.segments.len() - 1].end()
    }

    pub fn distance(&self, z: Complex64) -> f64 {
        self.segments.iter().map(|s| s.distance(z)).fold(f64::INFINITY, f64::min)
    }

    /// Detour around each point of `around` closer than `r` to a line segment,
    /// by a semicircle of radius 2r on the side away from the point.
    fn deform(&mut self, around: &[Complex64], r: f64) -> usize {
        let mut count = 0;
        let mut i = 0;
        while i < self.segments.len() {
            let Segment::Line { a, b } = self.segments[i] else {
                i += 1;
                continue;
            };
            let d = b - a;
            let len = d.norm();
            let hit = around.iter().copied().find(|&z| {
                let t = ((z - a) * d.conj()).re / (len * len);
                let p = a + d * t;
                (p - z).norm() < r && t * len > 2.0 * r && (1.0 - t) * len > 2.0 * r
            });
            let Some(z) = hit else {
                i += 1;
                continue;
            };
            let u = d / len;
            let t = ((z - a) * d.conj()).re / (len * len);
            let p = a + d * t;
            let side = ((z - p) * u.conj()).im;
            let th = u.arg();
            // Start at p − 2ru (angle th+π) and sweep through the side opposite z.
            let (theta0, theta1) = if side >= 0.0 { (th + PI, th + 2.0 * PI) } else { (th + PI, th) };
            let p1 = p - u * (2.0 * r);
            let p2 = p + u * (2.0 * r);
            let repl = [
                Segment::Line { a, b: p1 },
                Segment::Arc { center: p, radius: 2.0 * r, theta0, theta1 },
                Segment::Line { a: p2, b },
            ];
            self.segments.splice(i..=i, repl);
            count += 1;
        }
        count
    }
}

/// Continuous-branch state of the logarithm: the current argument.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BranchState {
    pub arg: f64,
}

fn log_argument(pair: RationalPair, a: f64, y: Complex64) -> Result<(Complex64, Complex64), PoleError> {
    let cx = ChebyshevContext::new(pair.n, y);
    let f = cx.f()?;
    let df = cx.f_prime()?;
    let g = cx.g(pair.family)?;
    let a2 = a * a;
    let big_l = (f * f + a2) / ((1.0 + a2) * g);
    let h = df / (f * f - 1.0);
    Ok((big_l, h))
}

fn continued_log(l: Complex64, reference: f64) -> Complex64 {
    let mut z = l.ln();
    let k = ((reference - z.im) / (2.0 * PI)).round();
    z.im += 2.0 * PI * k;
    z
}

/// The integrand log(L)·f′/(f²−1) with the log continued from `state`.
pub fn integrand(
    family: KnotFamily,
    n: i64,
    a: f64,
    y: Complex64,
    state: &mut BranchState,
) -> Result<Complex64, VolumeError> {
    let (l, h) = log_argument(RationalPair::new(family, n), a, y)?;
    let z = continued_log(l, state.arg);
    if (z.im - state.arg).abs() > BRANCH_JUMP {
        return Err(VolumeError::BranchJump(y));
    }
    state.arg = z.im;
    Ok(z * h)
}

struct Contour<'a> {
    pair: RationalPair,
    a: f64,
    path: &'a IntegrationPath,
    with_j: bool,
    evals: usize,
}

impl AnchoredIntegrand<2> for Contour<'_> {
    type Anchor = f64;
    type Error = VolumeError;

    fn eval(&mut self, t: f64, anchor: &f64) -> Result<Values<2>, VolumeError> {
        self.evals += 1;
        let (y, dy) = self.path.point(t);
        let (l, h) = log_argument(self.pair, self.a, y)?;
        let z = continued_log(l, *anchor);
        if (z.im - anchor).abs() > BRANCH_JUMP {
            return Err(VolumeError::BranchJump(y));
        }
        let j = if self.with_j { h * dy } else { Complex64::new(0.0, 0.0) };
        Ok([z * h * dy, j])
    }

    fn anchor_at(&mut self, t: f64, from: &f64) -> Result<f64, VolumeError> {
        let (y, _) = self.path.point(t);
        let (l, _) = log_argument(self.pair, self.a, y)?;
        Ok(continued_log(l, *from).im)
    }
}

/// Break points with continued log arguments, spaced so that the argument
/// moves by less than π/4 and each step is short against the distance to the
/// nearest branch point of the log.
fn anchors(c: &mut Contour<'_>, branch_points: &[Complex64]) -> Result<(Vec<f64>, Vec<f64>), VolumeError> {
    let mut breaks = vec![0.0];
    let (l0, _) = log_argument(c.pair, c.a, c.path.start())?;
    let mut args = vec![l0.ln().im];
    for (i, seg) in c.path.segments.iter().enumerate() {
        let speed = seg.point(0.5).1.norm().max(1e-300);
        let mut tau = 0.0;
        while tau < 1.0 {
            let (y, _) = seg.point(tau);
            let dist = branch_points.iter().map(|b| (b - y).norm()).fold(f64::INFINITY, f64::min);
            let mut dt = (0.25 * dist / speed).clamp(1e-9, 0.125).min(1.0 - tau);
            let prev = *args.last().expect("nonempty");
            loop {
                let next = if tau + dt >= 1.0 - 1e-12 { 1.0 } else { tau + dt };
                let arg = c.anchor_at(i as f64 + next, &prev)?;
                if (arg - prev).abs() <= MAX_ARG_STEP || dt <= 1e-9 {
                    tau = next;
                    breaks.push(i as f64 + next);
                    args.push(arg);
                    break;
                }
                dt *= 0.5;
            }
        }
    }
    args.pop();
    Ok((breaks, args))
}

struct ContourOutput {
    value: Values<2>,
    error: f64,
    breaks: Vec<f64>,
    /// Log argument at the left end of each interval.
    args: Vec<f64>,
    /// Log argument at the end of the path.
    last_arg: f64,
    intervals: usize,
    evaluations: usize,
}

fn run_contour(
    pair: RationalPair,
    a: f64,
    path: &IntegrationPath,
    branch_points: &[Complex64],
    with_j: bool,
    opts: &VolumeOptions,
) -> Result<ContourOutput, VolumeError> {
    let mut c = Contour { pair, a, path, with_j, evals: 0 };
    let (breaks, args) = anchors(&mut c, branch_points)?;
    let last_arg = {
        let n = path.segments.len() as f64;
        c.anchor_at(n, args.last().expect("nonempty"))?
    };
    let r = integrate(&mut c, &breaks, args.clone(), opts.tol_quad, opts.max_subdivisions).map_err(|e| match e {
        QuadOutcome::Integrand(e) => e,
        QuadOutcome::Budget(err) => VolumeError::QuadratureFailure(err),
    })?;
    Ok(ContourOutput {
        value: r.value,
        error: r.error,
        breaks,
        args,
        last_arg,
        intervals: r.intervals,
        evaluations: r.evaluations,
    })
}

/// Zeros of f² + A² (moving branch points of the log).
pub fn moving_branch_points(n: i64, a: f64) -> Result<Vec<Complex64>, RileyError> {
    let s = poly_S(n - 1).poly;
    let sn = poly_S(n).poly;
    let y = IntPoly::monomial(1, 1);
    let numf = &sn.scale(2) - &(&y * &s);
    let den = &IntPoly::new(vec![-2, 1]) * &s;
    let p0 = (&numf * &numf).to_f64();
    let p1 = (&den * &den).to_f64();
    let len = p0.len().max(p1.len());
    let coeffs: Vec<f64> =
        (0..len).map(|j| p0.get(j).copied().unwrap_or(0.0) + a * a * p1.get(j).copied().unwrap_or(0.0)).collect();
    polynomial_roots(&coeffs)
}

/// A-independent singular points of the integrand. Points with f = ±1 and
/// g = 1 have L = 1 there, so log L cancels the pole of f′/(f²−1); they are skipped.
pub fn fixed_singularities(pair: RationalPair) -> Vec<Complex64> {
    excluded_points(pair.n)
        .into_iter()
        .filter(|e| match e.kind {
            ExclusionKind::FPlusOne | ExclusionKind::FMinusOne => {
                !matches!(pair.g(e.y), Ok(g) if (g - 1.0).norm() < 1e-8)
            }
            _ => true,
        })
        .map(|e| e.y)
        .collect()
}

fn point_segment_distance(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    Segment::Line { a, b }.distance(z)
}

/// Drop trajectory points while the chord stays close relative to the fixed singularities.
fn decimate(points: &[Complex64], fixed: &[Complex64]) -> Vec<Complex64> {
    let dfix = |z: Complex64| fixed.iter().map(|s| (s - z).norm()).fold(f64::INFINITY, f64::min);
    let mut out = vec![points[0]];
    let mut i = 0;
    while i + 1 < points.len() {
        let mut j = i + 1;
        while j + 1 < points.len() {
            let cand = j + 1;
            let ok = (i + 1..cand)
                .all(|k| point_segment_distance(points[k], points[i], points[cand]) <= 0.1 * dfix(points[k]));
            if !ok {
                break;
            }
            j = cand;
        }
        out.push(points[j]);
        i = j;
    }
    out
}

fn map_quad<E: Into<VolumeError>>(e: QuadOutcome<E>) -> VolumeError {
    match e {
        QuadOutcome::Integrand(e) => e.into(),
        QuadOutcome::Budget(err) => VolumeError::QuadratureFailure(err),
    }
}

fn schlafli_hyperbolic(br: &GeometricBranch, alpha: f64, opts: &VolumeOptions) -> Result<(f64, f64), VolumeError> {
    let n = br.n;
    let ak = br.alpha_k;
    let top = (ak - alpha).sqrt();
    integrate_real(
        |s: f64| -> Result<f64, VolumeError> {
            if s < S_UNRESOLVED {
                return Ok(0.0);
            }
            let beta = ak - s * s;
            let y = br.hyperbolic_root_at(beta)?;
            Ok(hyperbolic_length(n, beta, y)? * s)
        },
        0.0,
        top,
        opts.tol_quad,
        opts.max_subdivisions,
    )
    .map_err(map_quad)
}

fn schlafli_spherical(br: &GeometricBranch, alpha: f64, opts: &VolumeOptions) -> Result<(f64, f64), VolumeError> {
    let n = br.n;
    let ak = br.alpha_k;
    let a = alpha.min(2.0 * PI - alpha);
    let top = (a - ak).sqrt();
    integrate_real(
        |s: f64| -> Result<f64, VolumeError> {
            if s < S_UNRESOLVED {
                return Ok(0.0);
            }
            let beta = ak + s * s;
            let (yp, ym) = br.spherical_roots_at(beta)?;
            Ok(spherical_length(n, beta, yp, ym) * s)
        },
        0.0,
        top,
        opts.tol_quad,
        opts.max_subdivisions,
    )
    .map_err(map_quad)
}

/// ∫ l_β/2 dβ between α_K and α.
pub fn volume_schlafli(spec: &ConeManifoldSpec, opts: &VolumeOptions) -> Result<f64, VolumeError> {
    let br = geometric_branch(spec.family, spec.n)?;
    match regime_of(spec.alpha, br.alpha_k) {
        Regime::Hyperbolic => Ok(schlafli_hyperbolic(&br, spec.alpha, opts)?.0),
        Regime::Spherical => Ok(schlafli_spherical(&br, spec.alpha, opts)?.0),
        Regime::Euclidean => Err(GeometryError::Euclidean { alpha: spec.alpha }.into()),
        Regime::OutOfRange => Err(GeometryError::OutOfRange { alpha: spec.alpha, upper: 2.0 * PI - br.alpha_k }.into()),
    }
}

fn schlafli_result(
    spec: &ConeManifoldSpec,
    br: &GeometricBranch,
    regime: Regime,
    l_alpha: f64,
    opts: &VolumeOptions,
) -> Result<VolumeResult, VolumeError> {
    let (v, err) = match regime {
        Regime::Hyperbolic => schlafli_hyperbolic(br, spec.alpha, opts)?,
        _ => schlafli_spherical(br, spec.alpha, opts)?,
    };
    Ok(VolumeResult {
        spec: *spec,
        regime,
        volume: v,
        error_estimate: err,
        imaginary_residual: 0.0,
        branch_windings: 0,
        winding_correction: 0.0,
        schlafli_volume: Some(v),
        alpha_k: br.alpha_k,
        l_alpha,
        method: VolumeMethod::Schlafli,
        diagnostics: Diagnostics::default(),
    })
}

/// Hyperbolic volume at the geometric root y₀.
pub fn volume_hyperbolic(
    spec: &ConeManifoldSpec,
    y0: Complex64,
    opts: &VolumeOptions,
) -> Result<VolumeResult, VolumeError> {
    let br = geometric_branch(spec.family, spec.n)?;
    let pair = spec.pair();
    let alpha = spec.alpha;
    let l_alpha = hyperbolic_length(spec.n, alpha, y0)?;
    if br.alpha_k - alpha < TRANSITION_BAND {
        return schlafli_result(spec, &br, Regime::Hyperbolic, l_alpha, opts);
    }
    let a = cone_a(alpha);
    let yc = Complex64::new(br.collision_root, 0.0);
    let fixed = fixed_singularities(pair);
    let mut upper = vec![y0];
    upper.extend(br.hyperbolic.iter().filter(|p| p.0 > alpha).map(|p| p.1));
    upper.push(yc);
    let upper = decimate(&upper, &fixed);
    let k = upper.len() - 1;
    let mut vertices: Vec<Complex64> = upper[..k].iter().map(|y| y.conj()).collect();
    vertices.push(yc + opts.control_offset);
    vertices.extend(upper[..k].iter().rev());
    let mid_index = k;
    let mut path = IntegrationPath::polyline(&vertices);
    let moving = moving_branch_points(spec.n, a)?;
    for s in &fixed {
        if path.distance(*s) < opts.r_excl {
            return Err(VolumeError::PathBlocked(*s));
        }
    }
    // Segment boundaries before the midpoint shift with every detour there.
    let before = IntegrationPath { segments: path.segments[..mid_index].to_vec() };
    let mut before = before;
    let shift = before.deform(&moving, opts.r_excl);
    let deformations = path.deform(&moving, opts.r_excl);
    let t_mid = (mid_index + 2 * shift) as f64;
    let mut branch_points = moving.clone();
    branch_points.extend(&fixed);
    let ContourOutput { value, error, breaks, args, last_arg, intervals, evaluations } =
        run_contour(pair, a, &path, &branch_points, true, opts)?;
    let [big_f, big_j] = value;
    let windings = (last_arg / (2.0 * PI)).round() as i64;
    let f0 = pair.f(y0)?;
    let correction = PI * windings as f64 * ((f0 - 1.0) / (f0 + 1.0)).norm().ln();
    let volume = (Complex64::i() * big_f).re + correction;
    let mid_arg = breaks.iter().position(|&t| t == t_mid).and_then(|i| args.get(i).copied()).unwrap_or(0.0);
    let imaginary_residual = (big_f.re + mid_arg * big_j.im).abs();
    if opts.control_offset == Complex64::new(0.0, 0.0) && imaginary_residual > IMAG_TOL {
        return Err(VolumeError::NotReal(imaginary_residual));
    }
    let schlafli_volume = if opts.cross_check { Some(schlafli_hyperbolic(&br, alpha, opts)?.0) } else { None };
    Ok(VolumeResult {
        spec: *spec,
        regime: Regime::Hyperbolic,
        volume,
        error_estimate: error,
        imaginary_residual,
        branch_windings: windings,
        winding_correction: correction,
        schlafli_volume,
        alpha_k: br.alpha_k,
        l_alpha,
        method: VolumeMethod::Contour,
        diagnostics: Diagnostics {
            root_residual: pair.cone_residual(a, y0)?.norm(),
            path_segments: path.segments.len(),
            deformations,
            intervals,
            evaluations,
        },
    })
}

/// Spherical volume at the real pair (y₊, y₋).
pub fn volume_spherical(
    spec: &ConeManifoldSpec,
    yp: Complex64,
    ym: Complex64,
    opts: &VolumeOptions,
) -> Result<VolumeResult, VolumeError> {
    let br = geometric_branch(spec.family, spec.n)?;
    let pair = spec.pair();
    let alpha = spec.alpha.min(2.0 * PI - spec.alpha);
    let l_alpha = spherical_length(spec.n, spec.alpha, yp, ym);
    if alpha - br.alpha_k < TRANSITION_BAND {
        return schlafli_result(spec, &br, Regime::Spherical, l_alpha, opts);
    }
    let a = cone_a(alpha);
    let fixed = fixed_singularities(pair);
    let (lo, hi) = if yp.re < ym.re { (yp.re, ym.re) } else { (ym.re, yp.re) };
    for s in &fixed {
        if s.im.abs() < opts.r_excl && s.re > lo - opts.r_excl && s.re < hi + opts.r_excl {
            return Err(VolumeError::PathBlocked(*s));
        }
    }
    // Moving branch points near the axis become break points; the log argument
    // stays positive on the axis, so no detour is needed.
    let moving = moving_branch_points(spec.n, a)?;
    let mut cuts: Vec<Complex64> = moving
        .iter()
        .filter(|z| z.im.abs() < opts.r_excl && z.re > lo && z.re < hi)
        .map(|z| Complex64::new(z.re, 0.0))
        .collect();
    let forward = yp.re < ym.re;
    cuts.sort_by(|x, y| if forward { x.re.total_cmp(&y.re) } else { y.re.total_cmp(&x.re) });
    cuts.dedup();
    let mut vertices = vec![yp];
    vertices.extend(cuts);
    vertices.push(ym);
    let path = IntegrationPath::polyline(&vertices);
    let mut branch_points = moving.clone();
    branch_points.extend(&fixed);
    let ContourOutput { value, error, intervals, evaluations, .. } =
        run_contour(pair, a, &path, &branch_points, false, opts)?;
    let g = value[0];
    let imaginary_residual = g.im.abs();
    if imaginary_residual > IMAG_TOL {
        return Err(VolumeError::NotReal(imaginary_residual));
    }
    if g.re < -opts.tol_quad.max(error) {
        return Err(VolumeError::Orientation(g.re));
    }
    let schlafli_volume = if opts.cross_check { Some(schlafli_spherical(&br, spec.alpha, opts)?.0) } else { None };
    Ok(VolumeResult {
        spec: *spec,
        regime: Regime::Spherical,
        volume: g.re,
        error_estimate: error,
        imaginary_residual,
        branch_windings: 0,
        winding_correction: 0.0,
        schlafli_volume,
        alpha_k: br.alpha_k,
        l_alpha,
        method: VolumeMethod::Contour,
        diagnostics: Diagnostics {
            root_residual: pair.cone_residual(a, yp)?.norm().max(pair.cone_residual(a, ym)?.norm()),
            path_segments: path.segments.len(),
            deformations: 0,
            intervals,
            evaluations,
        },
    })
}

/// Classify the spec and compute its volume.
pub fn compute_volume(spec: &ConeManifoldSpec, opts: &VolumeOptions) -> Result<VolumeResult, VolumeError> {
    let rr = classify(spec)?;
    match (rr.regime, rr.roots) {
        (Regime::Hyperbolic, SelectedRoots::Hyperbolic { y0 }) => volume_hyperbolic(spec, y0, opts),
        (Regime::Spherical, SelectedRoots::Spherical { plus, minus }) => volume_spherical(spec, plus, minus, opts),
        (Regime::OutOfRange, _) => {
            Err(GeometryError::OutOfRange { alpha: spec.alpha, upper: 2.0 * PI - rr.alpha_k }.into())
        }
        _ => Err(GeometryError::Euclidean { alpha: spec.alpha }.into()),
    }
}
