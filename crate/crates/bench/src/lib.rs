//! Shared workloads for the criterion benchmarks in `benches/`.

use conevol::geometry::{critical_angle, ConeManifoldSpec};
use conevol::KnotFamily;
use std::f64::consts::PI;

/// Cells with a geometric branch, one per family and sign of n.
pub const CELLS: [(KnotFamily, i64); 6] = [
    (KnotFamily::C2n2, 2),
    (KnotFamily::C2n2, -2),
    (KnotFamily::C2n3, 2),
    (KnotFamily::C2n3, -2),
    (KnotFamily::C2nMinus2n, 2),
    (KnotFamily::C2nMinus2n, 3),
];

/// One hyperbolic and one spherical spec for the cell, halfway into each regime.
pub fn regime_specs(family: KnotFamily, n: i64) -> (ConeManifoldSpec, ConeManifoldSpec) {
    let ak = critical_angle(family, n).expect("cell has a geometric branch");
    let hyp = ConeManifoldSpec::new(family, n, 0.5 * ak).expect("valid");
    let sph = ConeManifoldSpec::new(family, n, 0.5 * (ak + PI)).expect("valid");
    (hyp, sph)
}
