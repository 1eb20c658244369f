//! Exact censuses of quadratic and dihedral-quartic extensions of
//! function fields over F_q, the zeta and L-function machinery behind
//! them, and irreducible-factor statistics — every analytic formula
//! backed by an independent brute-force oracle.

pub mod algebra;
pub mod error;
pub mod quadcensus;
pub mod zetalab;

pub use error::Error;
