//! Regime classification, the critical angle α_K and geometric root selection.
//!
//! Every seed root with Im f > 0 at a small cone angle is continued upward in α
//! until it collides with its conjugate on the real axis. Among the branches
//! that collide before π the one bounding the largest Schläfli volume is the
//! geometric one; its collision angle is α_K. The real pair born at the
//! collision is continued upward for the spherical regime.
//!
//! Near α_K roots are analytic in s = √|α − α_K|, so stored trajectories are
//! interpolated in s.

use crate::chebyshev::{KnotFamily, RationalPair};
use crate::representation::{hyperbolic_length, meridian, relation_residual};
use crate::riley::{build_cone_equation, cone_a, solve_cone_equation, RileyError};
use num_complex::Complex64;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

pub const SEED_ALPHA: f64 = 0.01;
pub const TRACK_STEP: f64 = 0.01;
/// |Im y| below which a tracked pair counts as collided.
pub const COLLISION_IM: f64 = 1e-9;
pub const ALPHA_TOL: f64 = 1e-10;
/// Half-width of the band around α_K treated as the Euclidean point itself.
pub const EUCLIDEAN_BAND: f64 = 1e-10;
const SEED_MIN_IM: f64 = 1e-7;
const MIN_STEP: f64 = 1e-13;
const MARCH_STEP: f64 = 0.002;
const SPHERICAL_S0: f64 = 1e-4;
const SPHERICAL_DS: f64 = 0.01;
/// Smallest s = √|α − α_K| resolved by the α_K tolerance.
const S_RESOLVED: f64 = 1e-4;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("invalid cone-manifold spec: {0}")]
    InvalidSpec(String),
    #[error("no root collision bracketed for {family} n={n}: no hyperbolic branch reaches the real axis below π")]
    NotBracketed { family: KnotFamily, n: i64 },
    #[error("selection ambiguity for {family} n={n}: candidates {candidates:?} are indistinguishable")]
    SelectionAmbiguity { family: KnotFamily, n: i64, candidates: Vec<Complex64> },
    #[error("root continuation lost at alpha = {alpha}")]
    TrackingLost { alpha: f64 },
    #[error("critical angle {alpha_k} lies outside [2π/3, π)")]
    CriticalAngleOutOfBounds { alpha_k: f64 },
    #[error("alpha = {alpha} is the Euclidean transition angle")]
    Euclidean { alpha: f64 },
    #[error("alpha = {alpha} is out of range: structures exist only below {upper}")]
    OutOfRange { alpha: f64, upper: f64 },
    #[error(transparent)]
    Riley(#[from] RileyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Hyperbolic,
    Euclidean,
    Spherical,
    OutOfRange,
}

impl Regime {
    pub fn token(self) -> &'static str {
        match self {
            Regime::Hyperbolic => "hyperbolic",
            Regime::Euclidean => "euclidean",
            Regime::Spherical => "spherical",
            Regime::OutOfRange => "out-of-range",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConeManifoldSpec {
    pub family: KnotFamily,
    pub n: i64,
    pub alpha: f64,
}

impl ConeManifoldSpec {
    pub fn new(family: KnotFamily, n: i64, alpha: f64) -> Result<Self, GeometryError> {
        if n == 0 {
            return Err(GeometryError::InvalidSpec("n must be nonzero".into()));
        }
        if !(alpha > 0.0 && alpha < 2.0 * PI) {
            return Err(GeometryError::InvalidSpec(format!("alpha = {alpha} must lie in (0, 2π)")));
        }
        Ok(ConeManifoldSpec { family, n, alpha })
    }

    pub fn pair(&self) -> RationalPair {
        RationalPair::new(self.family, self.n)
    }

    pub fn with_alpha(&self, alpha: f64) -> Self {
        ConeManifoldSpec { alpha, ..*self }
    }
}

/// Seed candidate examined during selection.
#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub seed: Complex64,
    pub collision_alpha: Option<f64>,
    /// Approximate Schläfli volume between the seed and the collision.
    pub score: f64,
}

/// The geometric root branch of one (family, n).
#[derive(Clone, Debug)]
pub struct GeometricBranch {
    pub family: KnotFamily,
    pub n: i64,
    pub alpha_k: f64,
    pub collision_root: f64,
    /// (α, y₀) with Im f(y₀) > 0, ascending α from the seed toward α_K.
    pub hyperbolic: Vec<(f64, Complex64)>,
    /// (α, y₊, y₋), ascending α from just above α_K to π.
    pub spherical: Vec<(f64, Complex64, Complex64)>,
    pub candidates: Vec<Candidate>,
}

fn newton(pair: RationalPair, a: f64, guess: Complex64) -> Option<Complex64> {
    let mut y = guess;
    for _ in 0..60 {
        let (r, dr) = pair.cone_residual_with_derivative(a, y).ok()?;
        if r.norm() == 0.0 {
            return Some(y);
        }
        if dr.norm() == 0.0 {
            return None;
        }
        let step = r / dr;
        y -= step;
        if !(y.re.is_finite() && y.im.is_finite()) {
            return None;
        }
        if step.norm() <= 1e-14 * (1.0 + y.norm()) {
            return Some(y);
        }
    }
    let r = pair.cone_residual(a, y).ok()?.norm();
    (r <= 1e-10).then_some(y)
}

fn im_f(pair: RationalPair, y: Complex64) -> f64 {
    pair.f(y).map(|f| f.im).unwrap_or(f64::NAN)
}

/// One continuation step with a reversal check.
fn step(pair: RationalPair, a0: f64, y0: Complex64, a1: f64, guess: Complex64) -> Option<Complex64> {
    let y = newton(pair, cone_a(a1), guess)?;
    let back = newton(pair, cone_a(a0), y)?;
    ((back - y0).norm() <= 1e-8 * (1.0 + y0.norm())).then_some(y)
}

fn extrapolate(pts: &[(f64, Complex64)], a: f64) -> Complex64 {
    match pts {
        [.., (a0, y0), (a1, y1)] if a1 != a0 => y1 + (y1 - y0) * ((a - a1) / (a1 - a0)),
        [.., (_, y1)] => *y1,
        [] => unreachable!("extrapolation needs a point"),
    }
}

enum RootState {
    Complex(Complex64),
    Collided,
}

/// Full solve at α: is the genuine root nearest `near` still off the real axis?
fn root_state(pair: RationalPair, alpha: f64, near: Complex64) -> Result<RootState, GeometryError> {
    let eq = build_cone_equation(pair.family, pair.n, cone_a(alpha));
    let best = solve_cone_equation(&eq)?
        .into_iter()
        .filter(|r| !r.spurious)
        .min_by(|x, y| (x.y - near).norm().total_cmp(&(y.y - near).norm()))
        .ok_or(GeometryError::TrackingLost { alpha })?;
    if best.y.im.abs() <= COLLISION_IM {
        return Ok(RootState::Collided);
    }
    let y = if im_f(pair, best.y) > 0.0 { best.y } else { best.y.conj() };
    Ok(RootState::Complex(y))
}

struct Track {
    points: Vec<(f64, Complex64)>,
    alpha_k: f64,
    collision_root: f64,
}

fn track_candidate(pair: RationalPair, seed: Complex64) -> Result<Option<Track>, GeometryError> {
    let mut pts = vec![(SEED_ALPHA, seed)];
    let mut h = TRACK_STEP;
    loop {
        let (a0, y0) = *pts.last().expect("seeded");
        if a0 >= PI {
            return Ok(None);
        }
        let a1 = (a0 + h).min(PI);
        let guess = extrapolate(&pts, a1);
        let accepted = step(pair, a0, y0, a1, guess).filter(|y| y.im.abs() > COLLISION_IM && im_f(pair, *y) > 0.0);
        if let Some(y) = accepted {
            pts.push((a1, y));
            h = (2.0 * h).min(TRACK_STEP);
            continue;
        }
        if let RootState::Collided = root_state(pair, a1, y0)? {
            return bisect_collision(pair, pts, a1).map(Some);
        }
        h *= 0.5;
        if h < MIN_STEP {
            return Err(GeometryError::TrackingLost { alpha: a0 });
        }
    }
}

fn bisect_collision(pair: RationalPair, mut pts: Vec<(f64, Complex64)>, mut hi: f64) -> Result<Track, GeometryError> {
    let (mut lo, mut reference) = *pts.last().expect("nonempty");
    while hi - lo > 0.5 * ALPHA_TOL {
        let mid = 0.5 * (lo + hi);
        match root_state(pair, mid, reference)? {
            RootState::Collided => hi = mid,
            RootState::Complex(y) => {
                lo = mid;
                reference = y;
                pts.push((mid, y));
            }
        }
    }
    let eq = build_cone_equation(pair.family, pair.n, cone_a(hi));
    let mut reals: Vec<f64> = solve_cone_equation(&eq)?
        .into_iter()
        .filter(|r| !r.spurious && r.y.im.abs() <= COLLISION_IM)
        .map(|r| r.y.re)
        .collect();
    reals.sort_by(|a, b| (a - reference.re).abs().total_cmp(&(b - reference.re).abs()));
    let collision_root = match reals.as_slice() {
        [a, b, ..] => 0.5 * (a + b),
        [a] => *a,
        [] => reference.re,
    };
    Ok(Track { points: pts, alpha_k: 0.5 * (lo + hi), collision_root })
}

fn schlafli_score(pair: RationalPair, track: &Track) -> f64 {
    let ls: Vec<(f64, f64)> =
        track.points.iter().map(|&(a, y)| (a, hyperbolic_length(pair.n, a, y).unwrap_or(0.0))).collect();
    let mut acc = 0.0;
    for w in ls.windows(2) {
        acc += 0.25 * (w[1].0 - w[0].0) * (w[0].1 + w[1].1);
    }
    if let Some(&(a, l)) = ls.last() {
        // l vanishes like √(α_K − α) at the collision.
        acc += (track.alpha_k - a) * l / 3.0;
    }
    acc
}

fn build_branch(family: KnotFamily, n: i64) -> Result<GeometricBranch, GeometryError> {
    let pair = RationalPair::new(family, n);
    let eq = build_cone_equation(family, n, cone_a(SEED_ALPHA));
    let seeds: Vec<Complex64> = solve_cone_equation(&eq)?
        .into_iter()
        .filter(|r| !r.spurious && r.y.im.abs() > SEED_MIN_IM && r.f.is_some_and(|f| f.im > 0.0))
        .map(|r| r.y)
        .collect();
    let mut candidates = Vec::new();
    let mut best: Option<(f64, Track)> = None;
    let mut runner_up = f64::NEG_INFINITY;
    for seed in seeds {
        let track = track_candidate(pair, seed)?;
        let score = track.as_ref().map(|t| schlafli_score(pair, t)).unwrap_or(f64::NEG_INFINITY);
        candidates.push(Candidate { seed, collision_alpha: track.as_ref().map(|t| t.alpha_k), score });
        if let Some(t) = track {
            match &best {
                Some((s, _)) if *s >= score => runner_up = runner_up.max(score),
                _ => {
                    if let Some((s, _)) = &best {
                        runner_up = runner_up.max(*s);
                    }
                    best = Some((score, t));
                }
            }
        }
    }
    let (score, track) = best.ok_or(GeometryError::NotBracketed { family, n })?;
    if runner_up.is_finite() && (score - runner_up).abs() <= 1e-6 * score.abs() {
        let candidates = candidates.iter().filter(|c| c.collision_alpha.is_some()).map(|c| c.seed).collect();
        return Err(GeometryError::SelectionAmbiguity { family, n, candidates });
    }
    if !(track.alpha_k >= 2.0 * PI / 3.0 - 1e-6 && track.alpha_k < PI) {
        return Err(GeometryError::CriticalAngleOutOfBounds { alpha_k: track.alpha_k });
    }
    let spherical = track_spherical(pair, &track)?;
    Ok(GeometricBranch {
        family,
        n,
        alpha_k: track.alpha_k,
        collision_root: track.collision_root,
        hyperbolic: track.points,
        spherical,
        candidates,
    })
}

fn track_spherical(pair: RationalPair, track: &Track) -> Result<Vec<(f64, Complex64, Complex64)>, GeometryError> {
    let ak = track.alpha_k;
    let yc = Complex64::new(track.collision_root, 0.0);
    // Local slope dy/ds of the hyperbolic branch, s = √(α_K − α), taken far
    // enough from α_K that s is resolved.
    let (a1, y1) = track
        .points
        .iter()
        .rev()
        .find(|p| ak - p.0 >= S_RESOLVED * S_RESOLVED * 100.0)
        .copied()
        .unwrap_or(track.points[0]);
    let s1 = (ak - a1).sqrt();
    let slope = (y1 - yc) / s1;
    // Continuing to α > α_K turns s into i·s′.
    let dir = (Complex64::i() * slope).re;
    let s_max = (PI - ak).sqrt();
    // (s′, y_a, y_b)
    let mut pts: Vec<(f64, Complex64, Complex64)> = vec![(0.0, yc, yc)];
    let mut s = SPHERICAL_S0.min(0.5 * s_max);
    let mut ds = s;
    while pts.last().expect("nonempty").0 < s_max {
        let target = s.min(s_max);
        let alpha = ak + target * target;
        let a = cone_a(alpha);
        let (ga, gb) = match pts.as_slice() {
            [_] => (yc + dir * target, yc - dir * target),
            [.., (s0, ya0, yb0), (s1, ya1, yb1)] => {
                let t = (target - s1) / (s1 - s0);
                (ya1 + (ya1 - ya0) * t, yb1 + (yb1 - yb0) * t)
            }
            [] => unreachable!(),
        };
        let ga = Complex64::new(ga.re, 0.0);
        let gb = Complex64::new(gb.re, 0.0);
        let (last_s, last_a, last_b) = *pts.last().expect("nonempty");
        let ya = newton(pair, a, ga);
        let yb = newton(pair, a, gb);
        let sep_guess = (ga - gb).norm();
        let ok = match (ya, yb) {
            (Some(ya), Some(yb)) => {
                let dist_ok = (ya - ga).norm() <= 0.25 * sep_guess && (yb - gb).norm() <= 0.25 * sep_guess;
                let moved_ok = pts.len() == 1
                    || ((ya - last_a).norm() <= 0.5 * (last_a - last_b).norm() + 4.0 * (ga - last_a).norm()
                        && (yb - last_b).norm() <= 0.5 * (last_a - last_b).norm() + 4.0 * (gb - last_b).norm());
                (dist_ok && moved_ok).then_some((ya, yb))
            }
            _ => None,
        };
        match ok {
            Some((ya, yb)) => {
                pts.push((target, Complex64::new(ya.re, 0.0), Complex64::new(yb.re, 0.0)));
                ds = (2.0 * ds).min(SPHERICAL_DS);
                s = target + ds;
            }
            None => {
                ds *= 0.5;
                s = last_s + ds;
                if ds < 1e-12 {
                    return Err(GeometryError::TrackingLost { alpha });
                }
            }
        }
    }
    let mut out: Vec<(f64, Complex64, Complex64)> =
        pts.into_iter().skip(1).map(|(s, a, b)| (ak + s * s, a, b)).collect();
    // Label so that the length is positive below π.
    let probe = out[out.len() / 2];
    if spherical_length_raw(pair.n, probe.0, probe.1, probe.2) < 0.0 {
        for p in out.iter_mut() {
            std::mem::swap(&mut p.1, &mut p.2);
        }
    }
    Ok(out)
}

fn spherical_length_raw(n: i64, alpha: f64, yp: Complex64, ym: Complex64) -> f64 {
    let a = cone_a(alpha);
    let fp = crate::chebyshev::eval_f(n, yp).map(|f| f.re).unwrap_or(f64::NAN);
    let fm = crate::chebyshev::eval_f(n, ym).map(|f| f.re).unwrap_or(f64::NAN);
    2.0 * (a.atan2(fp) - a.atan2(fm))
}

/// Length of the singular locus in the spherical regime, l = 2(arccot(f₊/A) − arccot(f₋/A)).
/// Negative for α > π, where l(2π − α) = −l(α).
pub fn spherical_length(n: i64, alpha: f64, yp: Complex64, ym: Complex64) -> f64 {
    if alpha == PI {
        return 2.0 * PI;
    }
    spherical_length_raw(n, alpha, yp, ym)
}

type BranchCell = Arc<OnceLock<Result<Arc<GeometricBranch>, GeometryError>>>;

fn cache() -> &'static Mutex<HashMap<(KnotFamily, i64), BranchCell>> {
    static CACHE: OnceLock<Mutex<HashMap<(KnotFamily, i64), BranchCell>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The geometric branch of (family, n), computed once and cached.
pub fn geometric_branch(family: KnotFamily, n: i64) -> Result<Arc<GeometricBranch>, GeometryError> {
    if n == 0 {
        return Err(GeometryError::InvalidSpec("n must be nonzero".into()));
    }
    let cell = {
        let mut map = cache().lock().unwrap_or_else(|e| e.into_inner());
        map.entry((family, n)).or_default().clone()
    };
    cell.get_or_init(|| build_branch(family, n).map(Arc::new)).clone()
}

/// α_K for (family, n).
pub fn critical_angle(family: KnotFamily, n: i64) -> Result<f64, GeometryError> {
    Ok(geometric_branch(family, n)?.alpha_k)
}

fn interpolate_in_s(pts: &[(f64, Complex64)], s: f64) -> Complex64 {
    // pts sorted by ascending s.
    let i = pts.partition_point(|p| p.0 < s);
    if i == 0 {
        return pts[0].1;
    }
    if i == pts.len() {
        let (s0, y0) = pts[i - 2];
        let (s1, y1) = pts[i - 1];
        return y1 + (y1 - y0) * ((s - s1) / (s1 - s0));
    }
    let (s0, y0) = pts[i - 1];
    let (s1, y1) = pts[i];
    if s1 == s0 {
        return y0;
    }
    y0 + (y1 - y0) * ((s - s0) / (s1 - s0))
}

fn march(
    pair: RationalPair,
    from: (f64, Complex64),
    to: f64,
    keep: impl Fn(Complex64) -> bool,
) -> Result<Complex64, GeometryError> {
    let mut pts = vec![from];
    let dir = (to - from.0).signum();
    let mut h = MARCH_STEP;
    loop {
        let (a0, y0) = *pts.last().expect("nonempty");
        if a0 == to {
            return Ok(y0);
        }
        let a1 = if (to - a0).abs() <= h { to } else { a0 + dir * h };
        let guess = extrapolate(&pts, a1);
        match step(pair, a0, y0, a1, guess).filter(|y| keep(*y)) {
            Some(y) => {
                pts.push((a1, y));
                h = (2.0 * h).min(MARCH_STEP);
            }
            None => {
                h *= 0.5;
                if h < MIN_STEP {
                    return Err(GeometryError::TrackingLost { alpha: a0 });
                }
            }
        }
    }
}

impl GeometricBranch {
    pub fn pair(&self) -> RationalPair {
        RationalPair::new(self.family, self.n)
    }

    /// The geometric root y₀(α) for 0 < α < α_K.
    pub fn hyperbolic_root_at(&self, alpha: f64) -> Result<Complex64, GeometryError> {
        let pair = self.pair();
        if !(alpha > 0.0 && alpha < self.alpha_k) {
            return Err(GeometryError::TrackingLost { alpha });
        }
        let keep = |y: Complex64| y.im.abs() > COLLISION_IM && im_f(pair, y) > 0.0;
        if alpha < SEED_ALPHA {
            return march(pair, self.hyperbolic[0], alpha, keep);
        }
        if let Some(&(_, y)) = self.hyperbolic.iter().find(|p| p.0 == alpha) {
            return Ok(y);
        }
        let mut by_s: Vec<(f64, Complex64)> = self
            .hyperbolic
            .iter()
            .rev()
            .map(|&(a, y)| ((self.alpha_k - a).max(0.0).sqrt(), y))
            .filter(|p| p.0 >= S_RESOLVED)
            .collect();
        by_s.insert(0, (0.0, Complex64::new(self.collision_root, 0.0)));
        let s = (self.alpha_k - alpha).sqrt();
        let guess = interpolate_in_s(&by_s, s);
        let i = self.hyperbolic.partition_point(|p| p.0 < alpha).max(1) - 1;
        let lower = self.hyperbolic[i];
        if let Some(y) = newton(pair, cone_a(alpha), guess) {
            let spacing = self
                .hyperbolic
                .get(i + 1)
                .map(|p| (p.1 - lower.1).norm())
                .unwrap_or((lower.1 - self.collision_root).norm());
            if keep(y) && (y - guess).norm() <= 0.25 * spacing.max(1e-12) + 1e-9 {
                return Ok(y);
            }
        }
        march(pair, lower, alpha, keep)
    }

    /// The real pair (y₊, y₋) at α_K < α ≤ π.
    pub fn spherical_roots_at(&self, alpha: f64) -> Result<(Complex64, Complex64), GeometryError> {
        let pair = self.pair();
        if !(alpha > self.alpha_k && alpha <= PI) {
            return Err(GeometryError::TrackingLost { alpha });
        }
        let yc = Complex64::new(self.collision_root, 0.0);
        let s = (alpha - self.alpha_k).sqrt();
        let mut sa = vec![(0.0, yc)];
        let mut sb = vec![(0.0, yc)];
        for &(a, p, m) in &self.spherical {
            let sp = (a - self.alpha_k).sqrt();
            if sp < S_RESOLVED {
                continue;
            }
            sa.push((sp, p));
            sb.push((sp, m));
        }
        let ga = interpolate_in_s(&sa, s);
        let gb = interpolate_in_s(&sb, s);
        let a = cone_a(alpha);
        let sep = (ga - gb).norm();
        let ya = newton(pair, a, ga).filter(|y| (y - ga).norm() <= 0.25 * sep);
        let yb = newton(pair, a, gb).filter(|y| (y - gb).norm() <= 0.25 * sep);
        match (ya, yb) {
            (Some(ya), Some(yb)) => Ok((Complex64::new(ya.re, 0.0), Complex64::new(yb.re, 0.0))),
            _ => Err(GeometryError::TrackingLost { alpha }),
        }
    }
}

/// Selected roots of a regime.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SelectedRoots {
    Hyperbolic { y0: Complex64 },
    Spherical { plus: Complex64, minus: Complex64 },
    None,
}

#[derive(Clone, Debug)]
pub struct RegimeResult {
    pub spec: ConeManifoldSpec,
    pub regime: Regime,
    pub alpha_k: f64,
    pub collision_root: f64,
    pub roots: SelectedRoots,
    pub f_values: Vec<Complex64>,
    /// (α, root) pairs of the continuation used for selection.
    pub continuation_trace: Vec<(f64, Complex64)>,
    /// Largest relation residual over the selected roots at m = e^{iα/2}.
    pub relation_residual: f64,
}

impl RegimeResult {
    /// The length of the singular locus at the selected roots, if any.
    pub fn length(&self) -> Option<f64> {
        match self.roots {
            SelectedRoots::Hyperbolic { y0 } => hyperbolic_length(self.spec.n, self.spec.alpha, y0).ok(),
            SelectedRoots::Spherical { plus, minus } => {
                Some(spherical_length(self.spec.n, self.spec.alpha, plus, minus))
            }
            SelectedRoots::None => None,
        }
    }
}

/// y₀ for a hyperbolic spec.
pub fn select_hyperbolic_root(spec: &ConeManifoldSpec) -> Result<Complex64, GeometryError> {
    let br = geometric_branch(spec.family, spec.n)?;
    br.hyperbolic_root_at(spec.alpha)
}

/// (y₊, y₋) for a spherical spec; angles above π use 2π − α.
pub fn select_spherical_roots(spec: &ConeManifoldSpec) -> Result<(Complex64, Complex64), GeometryError> {
    let br = geometric_branch(spec.family, spec.n)?;
    let a = spec.alpha.min(2.0 * PI - spec.alpha);
    br.spherical_roots_at(a)
}

pub fn regime_of(alpha: f64, alpha_k: f64) -> Regime {
    if (alpha - alpha_k).abs() <= EUCLIDEAN_BAND || (alpha - (2.0 * PI - alpha_k)).abs() <= EUCLIDEAN_BAND {
        Regime::Euclidean
    } else if alpha < alpha_k {
        Regime::Hyperbolic
    } else if alpha < 2.0 * PI - alpha_k {
        Regime::Spherical
    } else {
        Regime::OutOfRange
    }
}

pub fn classify(spec: &ConeManifoldSpec) -> Result<RegimeResult, GeometryError> {
    let br = geometric_branch(spec.family, spec.n)?;
    let pair = spec.pair();
    let regime = regime_of(spec.alpha, br.alpha_k);
    let m = meridian(spec.alpha);
    let p = spec.family.word_exponent(spec.n);
    let (roots, trace) = match regime {
        Regime::Hyperbolic => {
            let y0 = br.hyperbolic_root_at(spec.alpha)?;
            let mut trace: Vec<(f64, Complex64)> = br.hyperbolic.iter().copied().filter(|p| p.0 < spec.alpha).collect();
            trace.push((spec.alpha, y0));
            (SelectedRoots::Hyperbolic { y0 }, trace)
        }
        Regime::Spherical => {
            let a = spec.alpha.min(2.0 * PI - spec.alpha);
            let (plus, minus) = br.spherical_roots_at(a)?;
            let mut trace: Vec<(f64, Complex64)> = br.hyperbolic.to_vec();
            trace.push((br.alpha_k, Complex64::new(br.collision_root, 0.0)));
            trace.extend(br.spherical.iter().filter(|p| p.0 < a).map(|p| (p.0, p.1)));
            trace.push((a, plus));
            (SelectedRoots::Spherical { plus, minus }, trace)
        }
        Regime::Euclidean | Regime::OutOfRange => (SelectedRoots::None, Vec::new()),
    };
    let ys: Vec<Complex64> = match roots {
        SelectedRoots::Hyperbolic { y0 } => vec![y0],
        SelectedRoots::Spherical { plus, minus } => vec![plus, minus],
        SelectedRoots::None => vec![],
    };
    let f_values = ys.iter().filter_map(|y| pair.f(*y).ok()).collect();
    let relation = ys.iter().map(|y| relation_residual(spec.family, spec.n, p, m, *y)).fold(0.0, f64::max);
    Ok(RegimeResult {
        spec: *spec,
        regime,
        alpha_k: br.alpha_k,
        collision_root: br.collision_root,
        roots,
        f_values,
        continuation_trace: trace,
        relation_residual: relation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_eight_critical_angle() {
        let ak = critical_angle(KnotFamily::C2n2, 1).unwrap();
        assert!((ak - 2.0 * PI / 3.0).abs() < 1e-8, "{ak}");
    }

    #[test]
    fn figure_eight_small_angle_root() {
        let spec = ConeManifoldSpec::new(KnotFamily::C2n2, 1, 0.01).unwrap();
        let y = select_hyperbolic_root(&spec).unwrap();
        // Im f > 0 picks the lower member of the pair (3 ± i√3)/2.
        let want = Complex64::new(1.5, -(0.75f64.sqrt()));
        assert!((y - want).norm() < 1e-3, "{y}");
        assert!(spec.pair().f(y).unwrap().im > 0.0);
    }

    #[test]
    fn five_two_critical_angle() {
        let ak = critical_angle(KnotFamily::C2n3, 1).unwrap();
        assert!((ak - 2.40716981356).abs() < 1e-9, "{ak}");
    }

    #[test]
    fn classification() {
        let r = classify(&ConeManifoldSpec::new(KnotFamily::C2n2, 1, 0.5).unwrap()).unwrap();
        assert_eq!(r.regime, Regime::Hyperbolic);
        assert!(r.relation_residual <= 1e-9);
        let r = classify(&ConeManifoldSpec::new(KnotFamily::C2n2, 1, PI).unwrap()).unwrap();
        assert_eq!(r.regime, Regime::Spherical);
        let SelectedRoots::Spherical { plus, minus } = r.roots else { panic!() };
        let mut ys = [plus.re, minus.re];
        ys.sort_by(f64::total_cmp);
        assert!((ys[0] + 1.618033988749895).abs() < 1e-9 && (ys[1] - 0.618033988749895).abs() < 1e-9);
        let ak = r.alpha_k;
        let r = classify(&ConeManifoldSpec::new(KnotFamily::C2n2, 1, 2.0 * PI - ak + 0.1).unwrap()).unwrap();
        assert_eq!(r.regime, Regime::OutOfRange);
    }

    #[test]
    fn trefoil_has_no_collision() {
        assert!(matches!(critical_angle(KnotFamily::C2nMinus2n, 1), Err(GeometryError::NotBracketed { .. })));
    }
}
