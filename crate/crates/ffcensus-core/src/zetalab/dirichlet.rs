//! Affine Dirichlet L-polynomials of quadratic characters of F_q[x].
//!
//! For a square-free conductor g the character chi_g(m) = (g | m) has
//! L(u, chi_g) = sum over monic m of chi_g(m) u^{deg m}, and the sum
//! truncates: coefficients vanish for deg m >= deg g, leaving a
//! polynomial of degree exactly deg g - 1.

use super::curve::{infinite_type, InfiniteType};
use super::rational_fn::ZPoly;
use crate::algebra::{enumerate_monic, Field, Poly};
use crate::error::Error;
use num_bigint::BigInt;
use num_traits::Zero;

/// The affine L-polynomial of the quadratic character of conductor g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadCharacterL {
    /// Monic square-free conductor.
    pub conductor: Poly,
    /// Integer polynomial of degree deg(g) - 1, constant term 1.
    pub lpoly_affine: ZPoly,
    pub infinite_type: InfiniteType,
}

/// Character sum over all monic m with deg m < deg g.  Accepts any
/// square-free g (the unit part of g twists by a degree-parity sign).
pub(crate) fn character_sum_lpoly(field: &Field, g: &Poly) -> Result<ZPoly, Error> {
    if g.is_zero() || g.is_constant() {
        return Err(Error::BadParameter("conductor must have degree >= 1".into()));
    }
    if !field.is_squarefree(g)? {
        return Err(Error::NotSquarefree);
    }
    let d = g.deg();
    let mut coeffs = vec![BigInt::zero(); d];
    for n in 0..d {
        let mut acc = BigInt::zero();
        for m in enumerate_monic(field, n) {
            acc += BigInt::from(field.residue_symbol(&m, g));
        }
        coeffs[n] = acc;
    }
    Ok(ZPoly::from_coeffs(coeffs))
}

/// L(u, chi_g) for monic square-free g, with the vanishing of the first
/// out-of-range coefficient verified.
pub fn dirichlet_lpoly(field: &Field, g: &Poly) -> Result<QuadCharacterL, Error> {
    if !g.is_monic() {
        return Err(Error::BadParameter("conductor must be monic".into()));
    }
    let lp = character_sum_lpoly(field, g)?;
    let d = g.deg();
    if d >= 1 {
        // orthogonality kills every coefficient from deg g on
        let mut extra = BigInt::zero();
        for m in enumerate_monic(field, d) {
            extra += BigInt::from(field.residue_symbol(&m, g));
        }
        if !extra.is_zero() {
            return Err(Error::InternalConsistency(
                "character sum failed to vanish beyond the conductor degree".into(),
            ));
        }
    }
    Ok(QuadCharacterL {
        conductor: g.clone(),
        lpoly_affine: lp,
        infinite_type: infinite_type(field, g),
    })
}
