use conevol::geometry::{critical_angle, ConeManifoldSpec};
use conevol::volume::{compute_volume, VolumeError, VolumeOptions};
use conevol::KnotFamily;
use std::f64::consts::PI;

fn volume(family: KnotFamily, n: i64, alpha: f64) -> f64 {
    let spec = ConeManifoldSpec::new(family, n, alpha).unwrap();
    compute_volume(&spec, &VolumeOptions::default()).unwrap().volume
}

fn complete_volume(family: KnotFamily, n: i64) -> f64 {
    (4.0 * volume(family, n, 0.005) - volume(family, n, 0.01)) / 3.0
}

#[test]
fn figure_eight_complete_volume() {
    assert!((complete_volume(KnotFamily::C2n2, 1) - 2.029883212819307).abs() < 1e-6);
}

#[test]
fn figure_eight_from_both_families() {
    for alpha in [0.4, 1.3, 2.0, 2.5, PI] {
        let a = volume(KnotFamily::C2n2, 1, alpha);
        let b = volume(KnotFamily::C2n3, -1, alpha);
        assert!((a - b).abs() < 1e-8, "{alpha}: {a} vs {b}");
    }
}

#[test]
fn five_two_complete_volume() {
    assert!((complete_volume(KnotFamily::C2n3, 1) - 2.8281220883).abs() < 1e-6);
}

#[test]
fn six_one_complete_volume() {
    assert!((complete_volume(KnotFamily::C2n2, 2) - 3.1639632289).abs() < 1e-6);
}

#[test]
fn mirror_cells_agree() {
    for n in [2, 3] {
        let a = critical_angle(KnotFamily::C2nMinus2n, n).unwrap();
        let b = critical_angle(KnotFamily::C2nMinus2n, -n).unwrap();
        assert!((a - b).abs() < 1e-9);
        let va = volume(KnotFamily::C2nMinus2n, n, 1.0);
        let vb = volume(KnotFamily::C2nMinus2n, -n, 1.0);
        assert!((va - vb).abs() < 1e-8);
    }
}

#[test]
fn euclidean_and_out_of_range_are_errors() {
    let ak = critical_angle(KnotFamily::C2n2, 1).unwrap();
    let spec = ConeManifoldSpec::new(KnotFamily::C2n2, 1, ak).unwrap();
    assert!(matches!(compute_volume(&spec, &VolumeOptions::default()), Err(VolumeError::Geometry(_))));
    let spec = ConeManifoldSpec::new(KnotFamily::C2n2, 1, 2.0 * PI - ak + 0.1).unwrap();
    assert!(matches!(compute_volume(&spec, &VolumeOptions::default()), Err(VolumeError::Geometry(_))));
}

#[test]
fn figure_eight_at_pi_is_spherical() {
    let v = volume(KnotFamily::C2n2, 1, PI);
    assert!(v > 0.0 && v < 2.0 * PI * PI);
}
