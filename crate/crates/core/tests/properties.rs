use conevol::chebyshev::{eval_S, eval_f, eval_f_prime, eval_g, eval_g_prime, pell_residual, poly_S};
use conevol::geometry::{classify, critical_angle, ConeManifoldSpec, Regime, SelectedRoots};
use conevol::representation::{build_matrices, meridian, relation_residual};
use conevol::riley::{build_cone_equation, cone_a, lemma_cd_zero_sets, solve_cone_equation};
use conevol::volume::{compute_volume, volume_schlafli, VolumeOptions};
use conevol::{Complex64, KnotFamily};
use proptest::prelude::*;
use std::f64::consts::PI;

fn family() -> impl Strategy<Value = KnotFamily> {
    prop_oneof![Just(KnotFamily::C2n2), Just(KnotFamily::C2n3), Just(KnotFamily::C2nMinus2n)]
}

fn disk(r: f64) -> impl Strategy<Value = Complex64> {
    (0.0..1.0f64, 0.0..2.0 * PI).prop_map(move |(u, t)| Complex64::from_polar(r * u.sqrt(), t))
}

/// Families and n with a geometric branch.
fn geometric_cell() -> impl Strategy<Value = (KnotFamily, i64)> {
    (family(), prop_oneof![Just(-3i64), Just(-2), Just(1), Just(2), Just(3)])
        .prop_filter("trefoil cells have no cone structure", |(f, n)| !(*f == KnotFamily::C2nMinus2n && *n == 1))
}

fn far_from_poles(n: i64, y: Complex64) -> bool {
    (y - 2.0).norm() > 0.05 && eval_S(n - 1, y).norm() > 0.05
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pell_identity(y in disk(4.0), k in -6i64..=8) {
        prop_assert!(pell_residual(k, y) <= 1e-10);
    }

    #[test]
    fn chebyshev_at_two(k in -20i64..=20) {
        prop_assert!((eval_S(k, Complex64::new(2.0, 0.0)).re - (k + 1) as f64).abs() < 1e-9);
    }

    #[test]
    fn negative_index_symmetry(y in disk(3.0), k in 0i64..=12) {
        let lhs = eval_S(-k, y);
        let rhs = -eval_S(k - 2, y);
        prop_assert!((lhs - rhs).norm() <= 1e-10 * (1.0 + rhs.norm()));
    }

    #[test]
    fn exact_polynomial_matches_recurrence(y in disk(2.5), k in -8i64..=10) {
        let a = poly_S(k).poly.eval(y);
        let b = eval_S(k, y);
        prop_assert!((a - b).norm() <= 1e-9 * (1.0 + b.norm()));
    }

    #[test]
    fn derivatives_match_differences(fam in family(), n in -4i64..=4, y in disk(2.5)) {
        prop_assume!(n != 0 && far_from_poles(n, y));
        let h = 1e-6;
        let df = (eval_f(n, y + h).unwrap() - eval_f(n, y - h).unwrap()) / (2.0 * h);
        let fp = eval_f_prime(n, y).unwrap();
        prop_assert!((df - fp).norm() <= 1e-5 * (1.0 + fp.norm()));
        let dg = (eval_g(fam, n, y + h).unwrap() - eval_g(fam, n, y - h).unwrap()) / (2.0 * h);
        let gp = eval_g_prime(fam, n, y).unwrap();
        prop_assert!((dg - gp).norm() <= 1e-5 * (1.0 + gp.norm()));
    }

    #[test]
    fn trace_oracle(m in disk(2.0), y in disk(3.0)) {
        prop_assume!(m.norm() > 0.2);
        let (a, b) = build_matrices(KnotFamily::C2n3, m, y);
        prop_assert!(((a * b).trace() - y).norm() <= 1e-10 * (1.0 + y.norm()));
        let (a, b) = build_matrices(KnotFamily::C2n2, m, y);
        prop_assert!(((a * b.inverse()).trace() - y).norm() <= 1e-10 * (1.0 + y.norm()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cone_equation_even_in_a(fam in family(), n in -4i64..=4, alpha in 0.05..6.2f64) {
        prop_assume!(n != 0);
        let a = cone_a(alpha);
        prop_assert_eq!(build_cone_equation(fam, n, a).poly, build_cone_equation(fam, n, -a).poly);
    }

    #[test]
    fn genuine_roots_closed_under_conjugation(fam in family(), n in -3i64..=3, alpha in 0.05..6.2f64) {
        prop_assume!(n != 0);
        let eq = build_cone_equation(fam, n, cone_a(alpha));
        let roots: Vec<Complex64> = solve_cone_equation(&eq).unwrap().into_iter().filter(|r| !r.spurious).map(|r| r.y).collect();
        for r in &roots {
            let d = roots.iter().map(|s| (s - r.conj()).norm()).fold(f64::INFINITY, f64::min);
            prop_assert!(d < 1e-7);
        }
    }

    #[test]
    fn riley_and_cone_zero_sets_agree(fam in family(), n in -3i64..=3, alpha in 0.05..6.2f64) {
        prop_assume!(n != 0);
        let (phi, cone, d) = lemma_cd_zero_sets(fam, n, alpha).unwrap();
        prop_assert_eq!(phi.len(), cone.len());
        prop_assert!(d <= 1e-7);
    }

    #[test]
    fn selected_roots_satisfy_relation((fam, n) in geometric_cell(), t in 0.02..0.98f64) {
        let ak = critical_angle(fam, n).unwrap();
        let alpha = t * (2.0 * PI - ak);
        prop_assume!((alpha - ak).abs() > 1e-6);
        let spec = ConeManifoldSpec::new(fam, n, alpha).unwrap();
        let rr = classify(&spec).unwrap();
        let m = meridian(alpha);
        let p = fam.word_exponent(n);
        let ys = match rr.roots {
            SelectedRoots::Hyperbolic { y0 } => vec![y0],
            SelectedRoots::Spherical { plus, minus } => vec![plus, minus],
            SelectedRoots::None => vec![],
        };
        prop_assert!(!ys.is_empty());
        for y in ys {
            prop_assert!(relation_residual(fam, n, p, m, y) <= 1e-9);
        }
    }

    #[test]
    fn continuation_is_consistent((fam, n) in geometric_cell(), t in 0.05..0.95f64) {
        let ak = critical_angle(fam, n).unwrap();
        let a1 = t * ak;
        let a2 = a1 + 1e-3;
        let y1 = conevol::geometry::select_hyperbolic_root(&ConeManifoldSpec::new(fam, n, a1).unwrap()).unwrap();
        let y2 = conevol::geometry::select_hyperbolic_root(&ConeManifoldSpec::new(fam, n, a2).unwrap()).unwrap();
        prop_assert!((y1 - y2).norm() < 0.05);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hyperbolic_volume_decreases((fam, n) in geometric_cell(), t in 0.02..0.9f64) {
        let ak = critical_angle(fam, n).unwrap();
        let opts = VolumeOptions::default();
        let v1 = compute_volume(&ConeManifoldSpec::new(fam, n, t * ak).unwrap(), &opts).unwrap();
        let v2 = compute_volume(&ConeManifoldSpec::new(fam, n, (t + 0.05) * ak).unwrap(), &opts).unwrap();
        prop_assert_eq!(v1.regime, Regime::Hyperbolic);
        prop_assert!(v1.volume > v2.volume && v2.volume >= 0.0);
    }

    #[test]
    fn contour_matches_schlafli((fam, n) in geometric_cell(), t in 0.02..0.98f64) {
        let ak = critical_angle(fam, n).unwrap();
        let alpha = t * (2.0 * PI - ak);
        prop_assume!((alpha - ak).abs() > 1e-3);
        let spec = ConeManifoldSpec::new(fam, n, alpha).unwrap();
        let opts = VolumeOptions::default();
        let v = compute_volume(&spec, &opts).unwrap().volume;
        let s = volume_schlafli(&spec, &opts).unwrap();
        prop_assert!((v - s).abs() <= 1e-6, "{} vs {}", v, s);
    }

    #[test]
    fn spherical_volume_symmetric((fam, n) in geometric_cell(), t in 0.01..0.99f64) {
        let ak = critical_angle(fam, n).unwrap();
        let alpha = ak + t * (PI - ak);
        let opts = VolumeOptions::default();
        let a = compute_volume(&ConeManifoldSpec::new(fam, n, alpha).unwrap(), &opts).unwrap().volume;
        let b = compute_volume(&ConeManifoldSpec::new(fam, n, 2.0 * PI - alpha).unwrap(), &opts).unwrap().volume;
        prop_assert!((a - b).abs() <= 1e-8);
    }

    #[test]
    fn path_perturbation_leaves_volume((fam, n) in geometric_cell(), t in 0.05..0.9f64, dy in -0.1..0.1f64) {
        let ak = critical_angle(fam, n).unwrap();
        let spec = ConeManifoldSpec::new(fam, n, t * ak).unwrap();
        let base = compute_volume(&spec, &VolumeOptions::default()).unwrap().volume;
        let opts = VolumeOptions { control_offset: Complex64::new(0.0, dy), ..Default::default() };
        let moved = compute_volume(&spec, &opts).unwrap().volume;
        prop_assert!((base - moved).abs() <= 1e-8);
    }
}
