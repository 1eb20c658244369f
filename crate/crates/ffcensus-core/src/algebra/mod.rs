//! Exact arithmetic in F_q and F_q[x]: field construction, polynomial
//! arithmetic, factorization, residue symbols, and the enumeration
//! streams everything else consumes.
//!
//! All values are immutable; every operation is a pure function, so
//! anything here may be shared freely across threads.

pub mod enumerate;
pub mod factor;
pub mod field;
pub mod poly;
pub mod residue;

pub use enumerate::{
    enumerate_monic, enumerate_squarefree_monic, monic_by_index, monic_count,
    squarefree_monic_count,
};
pub use factor::{moebius, Factorization};
pub use field::{Elt, Field, MAX_Q};
pub use poly::Poly;

use crate::error::Error;

/// Builds the global arithmetic context F_q, q = p^e.  See [`Field::new`].
pub fn field_make(p: u64, e: u32, modulus: Option<Vec<u32>>) -> Result<Field, Error> {
    Field::new(p, e, modulus)
}
