//! Zeta functions of hyperelliptic function fields K = F_q(x, y),
//! y^2 = G(x) with G square-free.
//!
//! Z_K(u) = L_K(u) / ((1-u)(1-qu)) with deg L_K = 2 g_K; the L-polynomial
//! comes from counting points of the smooth model over F_{q^i} for
//! i = 1..g, converting to power sums of the inverse roots, running
//! Newton's identities, and completing with the functional-equation
//! symmetry b_{2g-i} = q^{g-i} b_i.

use super::rational_fn::{RationalFn, ZPoly};
use crate::algebra::{Field, Poly};
use crate::error::Error;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Behavior of the place at infinity of F_q(x) in K.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InfiniteType {
    /// deg G odd: one ramified place of degree 1.
    Ramified,
    /// deg G even, leading coefficient a square: two places of degree 1.
    Split,
    /// deg G even, leading coefficient a non-square: one place of degree 2.
    Inert,
}

impl InfiniteType {
    pub fn label(self) -> &'static str {
        match self {
            InfiniteType::Ramified => "ramified",
            InfiniteType::Split => "split",
            InfiniteType::Inert => "inert",
        }
    }

    /// Sum of the degrees of the infinite places.
    pub fn total_degree(self) -> usize {
        match self {
            InfiniteType::Ramified => 1,
            InfiniteType::Split | InfiniteType::Inert => 2,
        }
    }

    /// Number of infinite places.
    pub fn place_count(self) -> usize {
        match self {
            InfiniteType::Ramified | InfiniteType::Inert => 1,
            InfiniteType::Split => 2,
        }
    }

    /// Euler factors at infinity, as a polynomial prod_w (1 - u^{deg w}).
    pub fn euler_factor(self) -> ZPoly {
        match self {
            InfiniteType::Ramified => ZPoly::from_i64(&[1, -1]),
            InfiniteType::Split => ZPoly::from_i64(&[1, -1]).mul(&ZPoly::from_i64(&[1, -1])),
            InfiniteType::Inert => ZPoly::from_i64(&[1, 0, -1]),
        }
    }
}

/// Splitting behavior at infinity of the model y^2 = G(x).
pub fn infinite_type(field: &Field, g: &Poly) -> InfiniteType {
    if g.deg() % 2 == 1 {
        InfiniteType::Ramified
    } else if field.legendre(g.leading()) == 1 {
        InfiniteType::Split
    } else {
        InfiniteType::Inert
    }
}

/// The numerator L-polynomial, genus and discriminant exponent of a
/// function field over F_q.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveZeta {
    pub q: u32,
    /// L_K(u), integer coefficients, constant term 1, degree 2 genus.
    pub lpoly: ZPoly,
    pub genus: usize,
    /// 2 genus - 2 (negative for genus 0).
    pub disc_exponent: i64,
}

impl CurveZeta {
    pub fn genus_zero(q: u32) -> CurveZeta {
        CurveZeta {
            q,
            lpoly: ZPoly::one(),
            genus: 0,
            disc_exponent: -2,
        }
    }

    /// Unchecked constructor, for probing the validators with bad data.
    pub fn from_raw_parts(q: u32, lpoly: ZPoly, genus: usize) -> CurveZeta {
        CurveZeta {
            q,
            lpoly,
            genus,
            disc_exponent: 2 * genus as i64 - 2,
        }
    }

    /// Z_K(u) as an exact rational function.
    pub fn zeta(&self) -> RationalFn {
        let denom = ZPoly::from_i64(&[1, -1]).mul(&ZPoly::from_coeffs(vec![
            BigInt::one(),
            -BigInt::from(self.q),
        ]));
        RationalFn::new(self.lpoly.clone(), denom)
    }

    /// The exact functional-equation symmetry b_{2g-i} = q^{g-i} b_i.
    pub fn symmetry_holds(&self) -> bool {
        let g = self.genus;
        if self.lpoly.degree() != Some(2 * g) && g > 0 {
            return false;
        }
        if self.lpoly.coeff(0) != BigInt::one() {
            return false;
        }
        let q = BigInt::from(self.q);
        for i in 0..=g {
            let lhs = self.lpoly.coeff(2 * g - i);
            let rhs = q.pow((g - i) as u32) * self.lpoly.coeff(i);
            if lhs != rhs {
                return false;
            }
        }
        true
    }
}

/// Affine point count of y^2 = G(x) over the extension F_{q^i} described
/// by `big` together with the infinity contribution of the smooth model.
fn point_count(base: &Field, g: &Poly, big: &Field, table: &[u32]) -> u64 {
    let mut count = 0u64;
    for a in big.elements() {
        let v = base.peval_embedded(g, big, table, a);
        count += (1 + big.legendre(v)) as u64;
    }
    // points at infinity
    if g.deg() % 2 == 1 {
        count += 1;
    } else if big.legendre(table[g.leading() as usize]) == 1 {
        count += 2;
    }
    count
}

/// L-polynomial of K = F_q(x, sqrt(G)) by point counting.  G need not be
/// monic (a non-square leading coefficient is the quadratic twist) but
/// must be square-free of degree >= 1.
pub fn hyperelliptic_lpoly(field: &Field, g: &Poly) -> Result<CurveZeta, Error> {
    if g.is_zero() || g.is_constant() {
        return Err(Error::BadParameter(
            "the model needs a radicand of degree >= 1".into(),
        ));
    }
    if !field.is_squarefree(g)? {
        return Err(Error::NotSquarefree);
    }
    let genus = (g.deg() - 1) / 2;
    if genus == 0 {
        return Ok(CurveZeta::genus_zero(field.q()));
    }
    let q = BigInt::from(field.q());
    // power sums p_i = q^i + 1 - N_i for i = 1..genus
    let mut power_sums = Vec::with_capacity(genus);
    for i in 1..=genus {
        let n = if i == 1 {
            let table: Vec<u32> = (0..field.q()).collect();
            point_count(field, g, field, &table)
        } else {
            let big = Field::new(field.p() as u64, field.ext_degree() * i as u32, None)?;
            let table = field.embedding_into(&big)?;
            point_count(field, g, &big, &table)
        };
        power_sums.push(q.pow(i as u32) + 1 - BigInt::from(n));
    }
    // Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    let mut e = vec![BigInt::one()];
    for k in 1..=genus {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &e[k - i] * &power_sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (quot, rem) = num_integer::div_rem(acc, BigInt::from(k));
        if !rem.is_zero() {
            return Err(Error::InternalConsistency(
                "Newton identity produced a non-integer coefficient".into(),
            ));
        }
        e.push(quot);
    }
    // b_k = (-1)^k e_k for k <= genus, then complete by symmetry
    let mut b = vec![BigInt::zero(); 2 * genus + 1];
    for (k, ek) in e.iter().enumerate() {
        b[k] = if k % 2 == 0 { ek.clone() } else { -ek.clone() };
    }
    for k in genus + 1..=2 * genus {
        let i = 2 * genus - k;
        b[k] = q.pow((k - genus) as u32) * &b[i];
    }
    let z = CurveZeta {
        q: field.q(),
        lpoly: ZPoly::from_coeffs(b),
        genus,
        disc_exponent: 2 * genus as i64 - 2,
    };
    if !z.symmetry_holds() {
        return Err(Error::InternalConsistency(
            "functional equation symmetry failed after construction".into(),
        ));
    }
    Ok(z)
}

/// Z_F(u) of the rational function field: L_F = 1.
pub fn zeta_rational_base(field: &Field) -> RationalFn {
    CurveZeta::genus_zero(field.q()).zeta()
}

/// Dedekind zeta of the affine ring: the curve zeta with the Euler
/// factors at the infinite places removed.
pub fn affine_zeta(z: &CurveZeta, inf: InfiniteType) -> RationalFn {
    z.zeta().mul_poly(&inf.euler_factor())
}

/// Numeric roots of the L-polynomial by Durand–Kerner.
fn lpoly_roots(lpoly: &ZPoly) -> Vec<Complex64> {
    let deg = match lpoly.degree() {
        Some(d) if d > 0 => d,
        _ => return Vec::new(),
    };
    let coeffs: Vec<Complex64> = lpoly
        .0
        .iter()
        .map(|c| Complex64::new(c.to_f64().unwrap(), 0.0))
        .collect();
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..300 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            moved = moved.max(delta.norm());
        }
        if moved < 1e-14 {
            break;
        }
    }
    roots
}

/// Exact symmetry plus a numeric check that every inverse root has
/// absolute value sqrt(q) within `tol`.
pub fn check_rh(z: &CurveZeta, tol: f64) -> bool {
    if !z.symmetry_holds() {
        return false;
    }
    let sqrt_q = (z.q as f64).sqrt();
    for root in lpoly_roots(&z.lpoly) {
        let inv_mag = 1.0 / root.norm();
        if (inv_mag - sqrt_q).abs() >= tol {
            return false;
        }
    }
    true
}

/// h = L_K(1), with the (1 + sqrt q)^{2g} bound enforced.
pub fn class_number(z: &CurveZeta) -> Result<BigInt, Error> {
    let h = z
        .lpoly
        .eval_rational(&BigRational::one())
        .to_integer();
    if h < BigInt::one() {
        return Err(Error::InternalConsistency(format!(
            "class number {h} is not positive"
        )));
    }
    // (1 + sqrt q)^{2g} = A + B sqrt q expanded exactly in Z[sqrt q]
    let (mut a, mut b) = (BigInt::one(), BigInt::zero());
    let q = BigInt::from(z.q);
    for _ in 0..2 * z.genus {
        let na = &a + &b * &q;
        let nb = &a + &b;
        a = na;
        b = nb;
    }
    // h <= A + B sqrt q?
    let diff = &h - &a;
    let ok = if diff.is_negative() || diff.is_zero() {
        true
    } else {
        &diff * &diff <= &b * &b * &q
    };
    if !ok {
        return Err(Error::InternalConsistency(format!(
            "class number {h} violates the (1+sqrt q)^(2g) bound"
        )));
    }
    Ok(h)
}

/// Exact r with Res_{s=1} zeta_K(s) = r / log q: r = L_K(1/q)/(1 - 1/q).
pub fn residue_at_1(z: &CurveZeta) -> BigRational {
    let inv_q = BigRational::new(BigInt::one(), BigInt::from(z.q));
    let num = z.lpoly.eval_rational(&inv_q);
    num / (BigRational::one() - inv_q)
}

/// Z_K(q^{-2}), the exact value of the zeta function at s = 2.
pub fn zeta_value_at_2(z: &CurveZeta) -> BigRational {
    let x = BigRational::new(BigInt::one(), BigInt::from(z.q).pow(2));
    z.zeta().eval(&x)
}
