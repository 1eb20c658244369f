//! The affine base of a quadratic census: the polynomial ring itself or a
//! hyperelliptic order over it (a non-square constant radicand giving the
//! constant quadratic extension).
//!
//! The number of quadratic extensions of Frac(O) with finite discriminant
//! of degree m is the u^m coefficient of
//! `2^(#infinite places) * (sum_chi L_O(u, chi)) / zeta_O(u^2)`,
//! with chi running over the quadratic characters of Cl(O).  The trivial
//! character contributes zeta_O(u), a degree-twisted trivial character
//! contributes zeta_O(-u), and each nontrivial genus character a
//! polynomial.  At m = 0 the coefficient counts the trivial square class
//! as well (the unit-twist convention).

use super::chars::{character_group, character_lpoly, CensusCharacter, CharacterGroup};
use super::kummer::{
    certified_bounds, count_by_disc, enumerate_square_classes, QuadOrder, SquareClass,
};
use crate::algebra::{squarefree_monic_count, Field, Poly};
use crate::error::Error;
use crate::zetalab::{affine_zeta, hyperelliptic_lpoly, infinite_type, CurveZeta};
use crate::zetalab::{RationalFn, ZPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The ring whose quadratic extensions are being counted.
#[derive(Clone, Debug)]
pub enum AffineBase {
    /// O = F_q[x], the rational base.
    Rational,
    /// O = F_q[x][y]/(y^2 - G).
    Quadratic(QuadOrder),
}

impl AffineBase {
    pub fn rational() -> AffineBase {
        AffineBase::Rational
    }

    pub fn quadratic(field: &Field, radicand: Poly) -> Result<AffineBase, Error> {
        Ok(AffineBase::Quadratic(QuadOrder::new(field, radicand)?))
    }

    pub fn describe(&self) -> String {
        match self {
            AffineBase::Rational => "rational".into(),
            AffineBase::Quadratic(o) => format!("y^2={}", o.radicand.to_text()),
        }
    }

    /// Curve zeta data of the base field (genus 0 for the rational base
    /// and the constant extension).
    pub fn curve_zeta(&self, field: &Field) -> Result<CurveZeta, Error> {
        match self {
            AffineBase::Rational => Ok(CurveZeta::genus_zero(field.q())),
            AffineBase::Quadratic(o) if o.radicand.is_constant() => {
                Ok(CurveZeta::genus_zero(field.q()))
            }
            AffineBase::Quadratic(o) => hyperelliptic_lpoly(field, &o.radicand),
        }
    }

    /// Number of infinite places of the base field.
    pub fn infinite_places(&self, field: &Field) -> usize {
        match self {
            AffineBase::Rational => 1,
            AffineBase::Quadratic(o) if o.radicand.is_constant() => 1,
            AffineBase::Quadratic(o) => infinite_type(field, &o.radicand).place_count(),
        }
    }

    /// The Dedekind zeta of O as an exact rational function in u.
    pub fn affine_zeta_fn(&self, field: &Field) -> Result<RationalFn, Error> {
        let q = BigInt::from(field.q());
        match self {
            AffineBase::Rational => Ok(RationalFn::new(
                ZPoly::one(),
                ZPoly::from_coeffs(vec![BigInt::one(), -q]),
            )),
            AffineBase::Quadratic(o) if o.radicand.is_constant() => {
                // O = F_{q^2}[x] with degrees measured over F_q
                Ok(RationalFn::new(
                    ZPoly::one(),
                    ZPoly::from_coeffs(vec![BigInt::one(), BigInt::zero(), -(&q * &q)]),
                ))
            }
            AffineBase::Quadratic(o) => {
                let z = hyperelliptic_lpoly(field, &o.radicand)?;
                Ok(affine_zeta(&z, infinite_type(field, &o.radicand)))
            }
        }
    }

    /// Validated character group of Cl(O)[2]^.
    pub fn characters(&self, field: &Field) -> Result<CharacterGroup, Error> {
        match self {
            AffineBase::Rational => Ok(CharacterGroup {
                characters: vec![CensusCharacter::trivial()],
                dropped: Vec::new(),
                deg_twist_present: false,
            }),
            AffineBase::Quadratic(o) => character_group(field, o),
        }
    }
}

/// One character together with its affine L-series.
#[derive(Clone, Debug)]
pub enum CharacterL {
    /// The trivial character: L = zeta_O(u).
    Zeta,
    /// The degree-parity character: L = zeta_O(-u).
    ZetaTwisted,
    /// Nontrivial genus part: a polynomial (twist already applied).
    Polynomial(ZPoly),
}

/// All character L-data of a base, in a fixed order (trivial first).
pub fn character_ldata(
    field: &Field,
    base: &AffineBase,
) -> Result<Vec<(CensusCharacter, CharacterL)>, Error> {
    let grp = base.characters(field)?;
    if !grp.characters.len().is_power_of_two() {
        return Err(Error::InconsistentCharacters(format!(
            "character count {} is not a power of 2",
            grp.characters.len()
        )));
    }
    let order = match base {
        AffineBase::Rational => None,
        AffineBase::Quadratic(o) => Some(o),
    };
    let mut out = Vec::new();
    for chi in &grp.characters {
        let l = match (&chi.partition, chi.deg_twist) {
            (None, false) => CharacterL::Zeta,
            (None, true) => CharacterL::ZetaTwisted,
            (Some(_), _) => {
                let o = order.ok_or_else(|| {
                    Error::Internal("genus character without an order".into())
                })?;
                CharacterL::Polynomial(character_lpoly(field, o, chi)?)
            }
        };
        out.push((chi.clone(), l));
    }
    // trivial character first
    out.sort_by_key(|(chi, _)| !chi.is_trivial());
    Ok(out)
}

/// The census generating function
/// 2^{places} (sum_chi L_chi(u)) / zeta_O(u^2).
pub fn census_series(field: &Field, base: &AffineBase) -> Result<RationalFn, Error> {
    let zeta = base.affine_zeta_fn(field)?;
    let ldata = character_ldata(field, base)?;
    series_from_ldata(field, base, &zeta, &ldata)
}

/// The same series from explicitly supplied character L-data; the list
/// length must be a power of two.
pub fn series_from_ldata(
    field: &Field,
    base: &AffineBase,
    zeta: &RationalFn,
    ldata: &[(CensusCharacter, CharacterL)],
) -> Result<RationalFn, Error> {
    if !ldata.len().is_power_of_two() {
        return Err(Error::InconsistentCharacters(format!(
            "character count {} is not a power of 2",
            ldata.len()
        )));
    }
    let mut total = RationalFn::zero();
    for (_, l) in ldata {
        let term = match l {
            CharacterL::Zeta => zeta.clone(),
            CharacterL::ZetaTwisted => zeta.compose_minus_u(),
            CharacterL::Polynomial(p) => RationalFn::from_poly(p.clone()),
        };
        total = total.add(&term);
    }
    let unit_factor = BigInt::from(1u64 << base.infinite_places(field));
    let numerator = total.mul_poly(&ZPoly::from_coeffs(vec![unit_factor]));
    Ok(numerator.div(&zeta.compose_u_squared()))
}

/// Exact count of quadratic extensions of the base with finite
/// discriminant degree m (m = 0 row counts the unit-twist classes
/// including the trivial one).
pub fn quad_count_series(field: &Field, base: &AffineBase, m: usize) -> Result<BigInt, Error> {
    let series = census_series(field, base)?;
    let coeffs = series.series_coefficients(m);
    rational_to_count(&coeffs[m])
}

/// All counts up to m_max in one series expansion.
pub fn quad_counts_series(
    field: &Field,
    base: &AffineBase,
    m_max: usize,
) -> Result<Vec<BigInt>, Error> {
    let series = census_series(field, base)?;
    let coeffs = series.series_coefficients(m_max);
    coeffs.iter().map(rational_to_count).collect()
}

fn rational_to_count(c: &BigRational) -> Result<BigInt, Error> {
    if !c.is_integer() {
        return Err(Error::InternalConsistency(format!(
            "census coefficient {c} is not an integer"
        )));
    }
    let v = c.to_integer();
    if v.is_negative() {
        return Err(Error::InternalConsistency(format!(
            "census coefficient {v} is negative"
        )));
    }
    Ok(v)
}

/// Literal triple enumeration over the rational base: unit twist times
/// square-free monic discriminant.
pub fn quad_count_bruteforce_rational(field: &Field, m: usize) -> BigInt {
    BigInt::from(2) * BigInt::from(squarefree_monic_count(field, m))
}

/// Exhaustive Kummer enumeration over a quadratic base.  Certified when
/// the bounds came from [`certified_bounds`]; the m = 0 row adds the
/// trivial class back to match the series convention.
pub struct BruteforceCensus {
    pub counts: Vec<BigInt>,
    pub certified: bool,
    pub classes: Vec<SquareClass>,
}

pub fn quad_count_bruteforce_quadratic(
    field: &Field,
    order: &QuadOrder,
    m_max: usize,
    height_bound: Option<(usize, usize)>,
) -> Result<BruteforceCensus, Error> {
    let (need_a, need_b) = certified_bounds(field, order, m_max)?;
    let ((da, db), certified) = match height_bound {
        None => ((need_a, need_b), true),
        Some((ha, hb)) => ((ha, hb), ha >= need_a && hb >= need_b),
    };
    let classes = enumerate_square_classes(field, order, da, db, m_max)?;
    let mut counts = Vec::with_capacity(m_max + 1);
    for m in 0..=m_max {
        let mut c = BigInt::from(count_by_disc(&classes, m));
        if m == 0 {
            c += 1; // the trivial square class, counted by the series
        }
        counts.push(c);
    }
    Ok(BruteforceCensus {
        counts,
        certified,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::new(3, 1, None).unwrap()
    }

    #[test]
    fn rational_base_counts() {
        let field = f3();
        let base = AffineBase::rational();
        let counts = quad_counts_series(&field, &base, 8).unwrap();
        assert_eq!(counts[0], BigInt::from(2));
        assert_eq!(counts[1], BigInt::from(6));
        assert_eq!(counts[2], BigInt::from(12));
        for (m, c) in counts.iter().enumerate().skip(2) {
            let expect = BigInt::from(2) * (BigInt::from(3).pow(m as u32) - BigInt::from(3).pow(m as u32 - 1));
            assert_eq!(*c, expect);
            assert_eq!(*c, quad_count_bruteforce_rational(&field, m));
        }
    }

    #[test]
    fn series_matches_kummer_for_small_radicands() {
        let field = f3();
        for coeffs in [
            vec![0u32, 1],          // x
            vec![1, 1],             // x + 1
            vec![2, 0, 1],          // x^2 + 2 = x^2 - 1 split quadratic
            vec![1, 0, 1],          // x^2 + 1 irreducible, split infinity
            vec![0, 2, 0, 1],       // x^3 - x
            vec![1, 2, 0, 1],       // irreducible cubic
        ] {
            let g = Poly::from_coeffs(coeffs);
            let base = AffineBase::quadratic(&field, g.clone()).unwrap();
            let order = match &base {
                AffineBase::Quadratic(o) => o.clone(),
                _ => unreachable!(),
            };
            let m_max = 3;
            let series = quad_counts_series(&field, &base, m_max).unwrap();
            let brute = quad_count_bruteforce_quadratic(&field, &order, m_max, None).unwrap();
            assert!(brute.certified);
            assert_eq!(series, brute.counts, "g = {}", g.to_text());
        }
    }

    #[test]
    fn series_matches_kummer_for_twisted_radicands() {
        let field = f3();
        let eps = field.nonsquare();
        for coeffs in [vec![0u32, 1], vec![2, 0, 1], vec![0, 2, 0, 1]] {
            let g = field.pscale(&Poly::from_coeffs(coeffs), eps);
            let base = AffineBase::quadratic(&field, g.clone()).unwrap();
            let order = QuadOrder::new(&field, g.clone()).unwrap();
            let series = quad_counts_series(&field, &base, 3).unwrap();
            let brute = quad_count_bruteforce_quadratic(&field, &order, 3, None).unwrap();
            assert_eq!(series, brute.counts, "g = {}", g.to_text());
        }
    }

    #[test]
    fn constant_extension_series() {
        let field = f3();
        let base = AffineBase::quadratic(&field, Poly::constant(field.nonsquare())).unwrap();
        let counts = quad_counts_series(&field, &base, 4).unwrap();
        assert_eq!(counts[0], BigInt::from(2));
        assert_eq!(counts[1], BigInt::from(0));
        assert_eq!(counts[2], BigInt::from(18));
        assert_eq!(counts[3], BigInt::from(0));
        assert_eq!(counts[4], BigInt::from(144));
        let order = QuadOrder::new(&field, Poly::constant(field.nonsquare())).unwrap();
        let brute = quad_count_bruteforce_quadratic(&field, &order, 4, None).unwrap();
        assert_eq!(counts, brute.counts);
    }

    #[test]
    fn uncertified_when_bounds_too_small() {
        let field = f3();
        let order = QuadOrder::new(&field, Poly::from_coeffs(vec![0, 2, 0, 1])).unwrap();
        let brute = quad_count_bruteforce_quadratic(&field, &order, 3, Some((1, 0))).unwrap();
        assert!(!brute.certified);
    }
}
