//! Volumes of hyperbolic and spherical cone-manifolds whose singular locus is a
//! two-bridge knot in one of the families C(2n,2), C(2n,3) or C(2n,−2n).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod chebyshev;
pub mod geometry;
pub mod poly;
pub mod quadrature;
pub mod representation;
pub mod riley;
pub mod volume;

pub use chebyshev::{KnotFamily, PoleError, RationalPair};
pub use num_complex::Complex64;
