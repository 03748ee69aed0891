use crate::format::g12;
use crate::{parse_family, Failure, VerifyArgs};
use clap::ValueEnum;
use conevol::chebyshev::pell_residual;
use conevol::geometry::{critical_angle, ConeManifoldSpec, GeometryError};
use conevol::representation::{meridian, relation_residual, w12_closed_form, word_w12};
use conevol::riley::{build_cone_equation, cone_a, lemma_cd_zero_sets, solve_cone_equation};
use conevol::volume::{compute_volume, VolumeError, VolumeOptions};
use conevol::{Complex64, KnotFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Pell,
    LemmaCd,
    Representation,
    W12,
    Schlafli,
    Symmetry,
}

impl Suite {
    const ALL: [Suite; 6] =
        [Suite::Pell, Suite::LemmaCd, Suite::Representation, Suite::W12, Suite::Schlafli, Suite::Symmetry];

    fn name(self) -> &'static str {
        match self {
            Suite::Pell => "pell",
            Suite::LemmaCd => "lemma-cd",
            Suite::Representation => "representation",
            Suite::W12 => "w12",
            Suite::Schlafli => "schlafli",
            Suite::Symmetry => "symmetry",
        }
    }

    fn default_tol(self) -> f64 {
        match self {
            Suite::Pell => 1e-10,
            Suite::LemmaCd => 1e-7,
            Suite::Representation | Suite::W12 => 1e-9,
            Suite::Schlafli => 1e-6,
            Suite::Symmetry => 1e-8,
        }
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    skipped: usize,
    worst: f64,
    errors: Vec<String>,
}

impl Tally {
    fn record(&mut self, v: f64) {
        self.checks += 1;
        // A NaN sticks and fails the suite.
        if !self.worst.is_nan() && !(v <= self.worst) {
            self.worst = v;
        }
    }
}

const REPRESENTATION_ANGLES: [f64; 4] = [0.7, 1.9, 2.6, 3.6];

/// Roots of the cone equation that are not spurious, at a few fixed angles.
fn genuine_roots(family: KnotFamily, n: i64, t: &mut Tally) -> Vec<(f64, Complex64)> {
    let mut out = Vec::new();
    for alpha in REPRESENTATION_ANGLES {
        match solve_cone_equation(&build_cone_equation(family, n, cone_a(alpha))) {
            Ok(rs) => out.extend(rs.into_iter().filter(|r| !r.spurious).map(|r| (alpha, r.y))),
            Err(e) => t.errors.push(format!("{family} n={n}: {e}")),
        }
    }
    out
}

fn geometric_alpha_k(family: KnotFamily, n: i64, t: &mut Tally) -> Option<f64> {
    match critical_angle(family, n) {
        Ok(ak) => Some(ak),
        Err(GeometryError::NotBracketed { .. }) => {
            t.skipped += 1;
            None
        }
        Err(e) => {
            t.errors.push(format!("{family} n={n}: {e}"));
            None
        }
    }
}

fn volume(
    family: KnotFamily,
    n: i64,
    alpha: f64,
    opts: &VolumeOptions,
) -> Result<conevol::volume::VolumeResult, VolumeError> {
    compute_volume(&ConeManifoldSpec::new(family, n, alpha)?, opts)
}

fn run_suite(suite: Suite, cells: &[(KnotFamily, i64)], opts: &VolumeOptions) -> Tally {
    let mut t = Tally::default();
    match suite {
        Suite::Pell => {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for _ in 0..200 {
                let y = Complex64::from_polar(4.0 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..2.0 * PI));
                let k = rng.gen_range(-6..=8);
                t.record(pell_residual(k, y));
            }
        }
        Suite::LemmaCd => {
            let mut rng = ChaCha8Rng::seed_from_u64(12);
            for &(family, n) in cells {
                for _ in 0..10 {
                    let alpha = rng.gen_range(0.01..2.0 * PI - 0.01);
                    match lemma_cd_zero_sets(family, n, alpha) {
                        Ok((phi, cone, d)) => {
                            t.record(if phi.len() == cone.len() { d } else { f64::INFINITY });
                        }
                        Err(e) => t.errors.push(format!("{family} n={n}: {e}")),
                    }
                }
            }
        }
        Suite::Representation | Suite::W12 => {
            for &(family, n) in cells {
                let p = family.word_exponent(n);
                for (alpha, y) in genuine_roots(family, n, &mut t) {
                    let m = meridian(alpha);
                    let v = if suite == Suite::Representation {
                        relation_residual(family, n, p, m, y)
                    } else {
                        let w = word_w12(family, n, p, m, y);
                        (w - w12_closed_form(family, n, p, m, y)).norm() / w.norm().max(1.0)
                    };
                    t.record(v);
                }
            }
        }
        Suite::Schlafli => {
            let opts = VolumeOptions { cross_check: true, ..*opts };
            for &(family, n) in cells {
                let Some(ak) = geometric_alpha_k(family, n, &mut t) else { continue };
                for alpha in [0.3 * ak, 0.7 * ak, ak + 0.3 * (PI - ak), 2.0 * PI - ak - 0.4 * (PI - ak)] {
                    match volume(family, n, alpha, &opts) {
                        Ok(r) => t.record((r.volume - r.schlafli_volume.unwrap_or(f64::NAN)).abs()),
                        Err(e) => t.errors.push(format!("{family} n={n} α={alpha:.4}: {e}")),
                    }
                }
            }
        }
        Suite::Symmetry => {
            for &(family, n) in cells {
                let Some(ak) = geometric_alpha_k(family, n, &mut t) else { continue };
                for s in [0.2, 0.5, 0.8] {
                    let alpha = ak + s * (PI - ak);
                    match (volume(family, n, alpha, opts), volume(family, n, 2.0 * PI - alpha, opts)) {
                        (Ok(a), Ok(b)) => t.record((a.volume - b.volume).abs()),
                        (Err(e), _) | (_, Err(e)) => t.errors.push(format!("{family} n={n} α={alpha:.4}: {e}")),
                    }
                }
            }
        }
    }
    t
}

pub fn run(args: &VerifyArgs) -> Result<(), Failure> {
    let families = match &args.family {
        Some(f) => vec![parse_family(f)?],
        None => KnotFamily::ALL.to_vec(),
    };
    let ns = match args.n {
        Some(0) => return Err(Failure::General("n must be nonzero".into())),
        Some(n) => vec![n],
        None => vec![-2, -1, 1, 2],
    };
    let cells: Vec<(KnotFamily, i64)> = families.iter().flat_map(|&f| ns.iter().map(move |&n| (f, n))).collect();
    let suites = if args.suite.is_empty() { Suite::ALL.to_vec() } else { args.suite.clone() };
    let opts = VolumeOptions { tol_quad: args.tol_quad, ..Default::default() };
    println!("{:<16} {:>8} {:>8} {:>20} {:>12}  status", "suite", "checks", "skipped", "worst", "tolerance");
    let mut all_pass = true;
    for suite in suites {
        let tol = args.tol_root.unwrap_or(suite.default_tol());
        let t = run_suite(suite, &cells, &opts);
        let pass = t.errors.is_empty() && t.worst <= tol;
        all_pass &= pass;
        println!(
            "{:<16} {:>8} {:>8} {:>20} {:>12}  {}",
            suite.name(),
            t.checks,
            t.skipped,
            g12(t.worst),
            g12(tol),
            if pass { "PASS" } else { "FAIL" }
        );
        for e in &t.errors {
            println!("    {e}");
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}
