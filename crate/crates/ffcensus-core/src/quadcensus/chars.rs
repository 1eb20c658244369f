//! Quadratic characters of the ideal class group of a hyperelliptic
//! affine ring, realized through genus theory.
//!
//! A candidate character is an unordered coprime factorization
//! G~ = f1 f2 of the monic part of the radicand (values through residue
//! symbols in the residue fields), optionally twisted by the degree-parity
//! sign (-1)^{deg P}.  A candidate is kept only if it is trivial on a
//! large sweep of principal ideals; ray-class characters that see the
//! infinite places fail this and are dropped, and the degree character
//! survives exactly when every principal ideal has even degree.  The
//! surviving set must form a group of 2-power order.
//!
//! The L-series of a surviving character with nontrivial genus part is a
//! polynomial of degree deg G~ - 2, computed two independent ways: a
//! truncated Euler product over the primes of the ring, and the
//! factorization into two Dirichlet L-polynomials of the base field.

use super::kummer::{finite_valuations, PrimeTag, QuadElt, QuadOrder, SplitType};
use crate::algebra::{enumerate_monic, Field, Poly};
use crate::error::Error;
use crate::zetalab::dirichlet::character_sum_lpoly;
use crate::zetalab::ZPoly;
use num_bigint::BigInt;
use num_traits::Zero;

/// A quadratic character of the ideal group of a [`QuadOrder`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusCharacter {
    /// None: trivial genus part.  Some((f1, f2)): f1 f2 = monic part of G,
    /// f1 the lexicographically smaller factor.
    pub partition: Option<(Poly, Poly)>,
    /// Whether values carry the extra sign (-1)^{deg P}.
    pub deg_twist: bool,
}

impl CensusCharacter {
    pub fn trivial() -> CensusCharacter {
        CensusCharacter {
            partition: None,
            deg_twist: false,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.partition.is_none() && !self.deg_twist
    }

    /// Value on a prime of the order above the monic irreducible p.
    pub fn value(
        &self,
        field: &Field,
        order: &QuadOrder,
        p: &Poly,
        tag: PrimeTag,
        degree: usize,
    ) -> i32 {
        let mut v = match (&self.partition, tag) {
            (None, _) => 1,
            (Some(_), PrimeTag::Inert) => 1,
            (Some((f1, f2)), _) => {
                let divides_f1 = field.prem(f1, p).is_zero();
                if divides_f1 {
                    // use the complementary factor at its own ramified primes
                    let other = field.pscale(f2, order.radicand.leading());
                    field.residue_symbol(p, &other)
                } else {
                    field.residue_symbol(p, f1)
                }
            }
        };
        debug_assert!(v != 0, "character value vanished at {}", p.to_text());
        if self.deg_twist && degree % 2 == 1 {
            v = -v;
        }
        v
    }

    /// Value on the principal ideal (alpha), through its valuations.
    pub fn value_on_principal(
        &self,
        field: &Field,
        order: &QuadOrder,
        alpha: &QuadElt,
    ) -> Result<i32, Error> {
        let mut acc = 1i32;
        for pv in finite_valuations(field, order, alpha)? {
            if pv.valuation % 2 == 1 {
                acc *= self.value(field, order, &pv.p, pv.tag, pv.degree);
            }
        }
        Ok(acc)
    }
}

fn poly_by_index(field: &Field, max_deg: usize, k: u64) -> Poly {
    let q = field.q() as u64;
    let mut coeffs = Vec::with_capacity(max_deg + 1);
    let mut t = k;
    for _ in 0..=max_deg {
        coeffs.push((t % q) as u32);
        t /= q;
    }
    Poly::from_coeffs(coeffs)
}

/// Validation sweep: the character must be +1 on (alpha) for every
/// nonzero alpha = a + b y in a degree box.
fn passes_principal_test(
    field: &Field,
    order: &QuadOrder,
    chi: &CensusCharacter,
    deg_a: usize,
    deg_b: usize,
) -> Result<bool, Error> {
    let q = field.q() as u64;
    for ka in 0..q.pow(deg_a as u32 + 1) {
        let a = poly_by_index(field, deg_a, ka);
        for kb in 0..q.pow(deg_b as u32 + 1) {
            let b = poly_by_index(field, deg_b, kb);
            let alpha = QuadElt::new(a.clone(), b.clone());
            if alpha.is_zero() {
                continue;
            }
            if chi.value_on_principal(field, order, &alpha)? != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Monic irreducibles of degree <= d with their splitting in the order.
pub fn primes_with_splitting(
    field: &Field,
    order: &QuadOrder,
    d: usize,
) -> Vec<(Poly, SplitType)> {
    let mut out = Vec::new();
    for deg in 1..=d {
        for p in enumerate_monic(field, deg) {
            if field.is_irreducible(&p) {
                let st = order.split_type(field, &p);
                out.push((p, st));
            }
        }
    }
    out
}

/// Value vector on a fixed prime list, used to identify characters as
/// functions on the class group.
fn value_vector(
    field: &Field,
    order: &QuadOrder,
    chi: &CensusCharacter,
    primes: &[(Poly, SplitType)],
) -> Vec<i32> {
    let mut out = Vec::new();
    for (p, st) in primes {
        let deg = p.deg();
        match st {
            SplitType::Ramified => out.push(chi.value(field, order, p, PrimeTag::Ramified, deg)),
            SplitType::Inert => out.push(chi.value(field, order, p, PrimeTag::Inert, 2 * deg)),
            // both branches share the genus value; the twist sign too
            SplitType::Split => out.push(chi.value(field, order, p, PrimeTag::SplitA, deg)),
        }
    }
    out
}

/// The validated quadratic character group of Cl(O), together with the
/// bookkeeping of dropped ray-class candidates.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub characters: Vec<CensusCharacter>,
    /// Candidates rejected by the principal-ideal test.
    pub dropped: Vec<CensusCharacter>,
    /// Whether the degree-parity twist was among the survivors.
    pub deg_twist_present: bool,
}

/// Builds and validates the character set of Cl(O)[2]^.
pub fn character_group(field: &Field, order: &QuadOrder) -> Result<CharacterGroup, Error> {
    let g = &order.radicand;
    let gm = field.pmonic(g);
    // unordered coprime factorizations of the monic part
    let mut partitions: Vec<Option<(Poly, Poly)>> = vec![None];
    if !gm.is_constant() {
        let factors = field.factor_poly(&gm)?.factors;
        let r = factors.len();
        for mask in 1u32..(1 << r) {
            let mut f1 = Poly::one();
            let mut f2 = Poly::one();
            for (i, (p, _)) in factors.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    f1 = field.pmul(&f1, p);
                } else {
                    f2 = field.pmul(&f2, p);
                }
            }
            // identify (f1, f2) ~ (f2, f1): keep the sorted representative
            let key = (f1.deg(), f1.clone());
            let other = (f2.degree().unwrap_or(0), f2.clone());
            if key < other {
                partitions.push(Some((f1, f2)));
            }
        }
    }
    // validation box: rich enough to expose ray characters, cheap enough
    // to sweep at q = 7
    let (va, vb) = if field.q() <= 3 { (3, 2) } else { (2, 1) };
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for part in partitions {
        for twist in [false, true] {
            let chi = CensusCharacter {
                partition: part.clone(),
                deg_twist: twist,
            };
            if chi.is_trivial() {
                kept.push(chi);
                continue;
            }
            if passes_principal_test(field, order, &chi, va, vb)? {
                kept.push(chi);
            } else {
                dropped.push(chi);
            }
        }
    }
    // deduplicate as functions on small primes (their classes generate)
    let genus = if gm.is_constant() { 0 } else { (gm.deg() - 1) / 2 };
    let d_id = (genus + 1).max(2).max(gm.degree().unwrap_or(0));
    let primes = primes_with_splitting(field, order, d_id);
    let mut seen: Vec<Vec<i32>> = Vec::new();
    let mut unique = Vec::new();
    for chi in kept {
        let vv = value_vector(field, order, &chi, &primes);
        if seen.contains(&vv) {
            continue;
        }
        seen.push(vv);
        unique.push(chi);
    }
    // group sanity: 2-power order, closed under products
    if !unique.len().is_power_of_two() {
        return Err(Error::InconsistentCharacters(format!(
            "{} validated characters (not a power of 2) for G = {}",
            unique.len(),
            g.to_text()
        )));
    }
    for i in 0..unique.len() {
        for j in i + 1..unique.len() {
            let prod: Vec<i32> = seen[i]
                .iter()
                .zip(seen[j].iter())
                .map(|(a, b)| a * b)
                .collect();
            if !seen.contains(&prod) {
                return Err(Error::InconsistentCharacters(
                    "validated characters are not closed under products".into(),
                ));
            }
        }
    }
    let deg_twist_present = unique
        .iter()
        .any(|c| c.partition.is_none() && c.deg_twist);
    Ok(CharacterGroup {
        characters: unique,
        dropped,
        deg_twist_present,
    })
}

/// Euler-product computation of the affine L-series of a character with
/// nontrivial genus part, truncated past the known polynomial degree.
/// The twist is NOT applied here (substitute -u afterwards).
fn genus_lpoly_euler(
    field: &Field,
    order: &QuadOrder,
    chi: &CensusCharacter,
) -> Result<ZPoly, Error> {
    let gm = field.pmonic(&order.radicand);
    let target = gm.deg() - 2;
    let slack = target + 2;
    let untwisted = CensusCharacter {
        partition: chi.partition.clone(),
        deg_twist: false,
    };
    let mut series = vec![BigInt::zero(); slack + 1];
    series[0] = BigInt::from(1);
    let push_factor = |value: i32, degree: usize, series: &mut Vec<BigInt>| {
        // multiply by (1 - value u^degree)^{-1}
        if degree > slack {
            return;
        }
        for k in degree..=slack {
            let add = &series[k - degree] * BigInt::from(value);
            series[k] += add;
        }
    };
    for (p, st) in primes_with_splitting(field, order, slack) {
        let d = p.deg();
        match st {
            SplitType::Ramified => {
                let v = untwisted.value(field, order, &p, PrimeTag::Ramified, d);
                push_factor(v, d, &mut series);
            }
            SplitType::Inert => {
                push_factor(1, 2 * d, &mut series);
            }
            SplitType::Split => {
                let v = untwisted.value(field, order, &p, PrimeTag::SplitA, d);
                push_factor(v, d, &mut series);
                push_factor(v, d, &mut series);
            }
        }
    }
    for k in target + 1..=slack {
        if !series[k].is_zero() {
            return Err(Error::InternalConsistency(format!(
                "character L-series does not terminate at degree {target} (coefficient {k} is {})",
                series[k]
            )));
        }
    }
    series.truncate(target + 1);
    Ok(ZPoly::from_coeffs(series))
}

/// The same L-polynomial through the biquadratic zeta factorization:
/// product of the Dirichlet L-polynomials of f1 and lc(G) f2.
fn genus_lpoly_product(
    field: &Field,
    order: &QuadOrder,
    chi: &CensusCharacter,
) -> Result<ZPoly, Error> {
    let (f1, f2) = chi
        .partition
        .as_ref()
        .ok_or_else(|| Error::Internal("product route needs a genus part".into()))?;
    let l1 = character_sum_lpoly(field, f1)?;
    let twisted_f2 = field.pscale(f2, order.radicand.leading());
    let l2 = character_sum_lpoly(field, &twisted_f2)?;
    Ok(l1.mul(&l2))
}

/// L-polynomial of a validated character with nontrivial genus part, with
/// the two routes compared.  The degree twist is applied at the end.
pub fn character_lpoly(
    field: &Field,
    order: &QuadOrder,
    chi: &CensusCharacter,
) -> Result<ZPoly, Error> {
    let euler = genus_lpoly_euler(field, order, chi)?;
    let product = genus_lpoly_product(field, order, chi)?;
    if euler != product {
        return Err(Error::InternalConsistency(format!(
            "Euler and factorization routes disagree for G = {}: {:?} vs {:?}",
            order.radicand.to_text(),
            euler,
            product
        )));
    }
    Ok(if chi.deg_twist {
        euler.compose_scaled_power(true, 1)
    } else {
        euler
    })
}
