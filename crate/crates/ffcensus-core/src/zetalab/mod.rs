//! Exact zeta and L-function engine: curve zetas by point counting,
//! Dirichlet L-polynomials of quadratic characters, class numbers,
//! residues, and power-series coefficient extraction.

pub mod curve;
pub mod dirichlet;
pub mod rational_fn;

pub use curve::{
    affine_zeta, check_rh, class_number, hyperelliptic_lpoly, infinite_type, residue_at_1,
    zeta_rational_base, zeta_value_at_2, CurveZeta, InfiniteType,
};
pub use dirichlet::{dirichlet_lpoly, QuadCharacterL};
pub use rational_fn::{RationalFn, ZPoly};
