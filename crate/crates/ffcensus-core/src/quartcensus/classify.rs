//! Galois-type classification of quadratic-on-quadratic towers.
//!
//! L = K(sqrt(alpha)) over K = F(sqrt(d)) has Galois closure V4, C4 or D4
//! over F = F_q(x).  With N = alpha * sigma(alpha) in F:
//! V4 iff N is a square, C4 iff N lies in the square class of d, D4
//! otherwise.  The independent oracle checks the label against the
//! factorization types of the specialized quartic X^4 - s X^2 + N at
//! places x = t0 of F (Frobenius classes in the closure): only D4
//! contains transpositions (type 1+1+2), only C4 and D4 contain
//! 4-cycles, and the V4 case is certified exactly by the biquadratic
//! identity alpha (s + 2m) = (alpha + m)^2 with m^2 = N.

use crate::algebra::{Field, Poly};
use crate::error::Error;
use crate::quadcensus::{QuadElt, QuadOrder};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum QuarticLabel {
    D4,
    C4,
    V4,
}

impl QuarticLabel {
    pub fn label(self) -> &'static str {
        match self {
            QuarticLabel::D4 => "D4",
            QuarticLabel::C4 => "C4",
            QuarticLabel::V4 => "V4",
        }
    }
}

/// Norm-criterion classification.  `alpha` must not be a square in K.
pub fn classify_tower(
    field: &Field,
    order: &QuadOrder,
    alpha: &QuadElt,
) -> Result<QuarticLabel, Error> {
    if alpha.is_zero() || order.is_square(field, alpha) {
        return Err(Error::BadParameter(
            "tower top must be a non-square of K".into(),
        ));
    }
    let n = order.norm(field, alpha);
    if field.pis_square(&n) {
        return Ok(QuarticLabel::V4);
    }
    let nd = field.pmul(&n, &order.radicand);
    if field.pis_square(&nd) {
        return Ok(QuarticLabel::C4);
    }
    Ok(QuarticLabel::D4)
}

/// The exact V4 certificate: exhibits f in F with alpha f a square in K,
/// so L = F(sqrt(d), sqrt(f)).
pub fn v4_certificate(field: &Field, order: &QuadOrder, alpha: &QuadElt) -> Option<Poly> {
    let n = order.norm(field, alpha);
    let m = field.psqrt_exact(&n)?;
    let s = order.trace(field, alpha);
    for m_signed in [m.clone(), field.pneg(&m)] {
        let f = field.padd(&s, &field.pscale(&m_signed, field.from_int(2)));
        if f.is_zero() {
            continue;
        }
        // alpha * f = (alpha + m)^2
        let lhs = order.mul(field, alpha, &QuadElt::from_base(f.clone()));
        let shifted = QuadElt::new(field.padd(&alpha.a, &m_signed), alpha.b.clone());
        let rhs = order.mul(field, &shifted, &shifted);
        if lhs == rhs {
            return Some(f);
        }
    }
    None
}

/// Observed factorization-type tallies of the specialized quartic.
#[derive(Clone, Debug, Default)]
pub struct SplittingObservation {
    pub samples: usize,
    pub type_1111: usize,
    pub type_112: usize,
    pub type_22: usize,
    pub type_4: usize,
}

/// Factorization types of X^4 - s(t0) X^2 + N(t0) over F_{q^r} for all
/// good t0 with r = 1..=max_r.  Prime base fields only.
pub fn splitting_observation(
    field: &Field,
    order: &QuadOrder,
    alpha: &QuadElt,
    max_r: u32,
) -> Result<SplittingObservation, Error> {
    if field.ext_degree() != 1 {
        return Err(Error::BadParameter(
            "the splitting oracle runs over prime base fields".into(),
        ));
    }
    let s = order.trace(field, alpha);
    let n = order.norm(field, alpha);
    let mut obs = SplittingObservation::default();
    for r in 1..=max_r {
        let big = if r == 1 {
            field.clone()
        } else {
            Field::new(field.p() as u64, r, None)?
        };
        let table: Vec<u32> = if r == 1 {
            (0..field.q()).collect()
        } else {
            field.embedding_into(&big)?
        };
        for t0 in big.elements() {
            let sv = field.peval_embedded(&s, &big, &table, t0);
            let nv = field.peval_embedded(&n, &big, &table, t0);
            // discriminant factor 16 N (s^2 - 4N)^2: skip ramified points
            let s2 = big.mul(sv, sv);
            let four_n = big.mul(big.from_int(4), nv);
            if nv == 0 || s2 == four_n {
                continue;
            }
            let quartic = Poly::from_coeffs(vec![nv, 0, big.neg(sv), 0, 1]);
            if !big.is_squarefree(&quartic)? {
                continue;
            }
            let ftype = big.factor_type_squarefree(&quartic);
            obs.samples += 1;
            match ftype.as_slice() {
                [1, 1, 1, 1] => obs.type_1111 += 1,
                [1, 1, 2] => obs.type_112 += 1,
                [2, 2] => obs.type_22 += 1,
                [4] => obs.type_4 += 1,
                other => {
                    return Err(Error::InternalConsistency(format!(
                        "impossible splitting type {other:?} for a biquadratic resolvent"
                    )))
                }
            }
        }
    }
    Ok(obs)
}

/// Splitting-degree oracle verdict: agreement of a norm-criterion label
/// with the observed Frobenius types, using the exact certificate for V4.
pub fn oracle_agrees(
    field: &Field,
    order: &QuadOrder,
    alpha: &QuadElt,
    label: QuarticLabel,
    max_r: u32,
) -> Result<bool, Error> {
    match label {
        QuarticLabel::V4 => Ok(v4_certificate(field, order, alpha).is_some()),
        QuarticLabel::C4 => {
            let obs = splitting_observation(field, order, alpha, max_r)?;
            // cyclic: 4-cycles appear (density 1/2), transpositions never
            Ok(obs.samples >= 20 && obs.type_4 > 0 && obs.type_112 == 0)
        }
        QuarticLabel::D4 => {
            let obs = splitting_observation(field, order, alpha, max_r)?;
            // dihedral: transpositions appear (density 1/4)
            Ok(obs.type_112 > 0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::new(3, 1, None).unwrap()
    }

    #[test]
    fn biquadratic_is_v4() {
        // alpha = x + 1 in K = F(sqrt(x)): plainly F(sqrt x, sqrt(x+1))
        let field = f3();
        let order = QuadOrder::new(&field, Poly::x()).unwrap();
        let alpha = QuadElt::from_base(Poly::from_coeffs(vec![1, 1]));
        assert_eq!(classify_tower(&field, &order, &alpha).unwrap(), QuarticLabel::V4);
        assert!(v4_certificate(&field, &order, &alpha).is_some());
    }

    #[test]
    fn alpha_with_nonsquare_norm_off_d_class_is_d4() {
        // alpha = 1 + y over K = F(sqrt x): N = 1 - x, neither a square
        // nor x times a square
        let field = f3();
        let order = QuadOrder::new(&field, Poly::x()).unwrap();
        let alpha = QuadElt::new(Poly::one(), Poly::one());
        assert_eq!(classify_tower(&field, &order, &alpha).unwrap(), QuarticLabel::D4);
        assert!(oracle_agrees(&field, &order, &alpha, QuarticLabel::D4, 4).unwrap());
    }

    #[test]
    fn constant_tower_c4() {
        // K = F_9(x), alpha = a generator of F_9^*: N(alpha) = alpha^{1+3}
        // generates F_3^* = {1, -1}: N = -1 = eps, the class of the
        // radicand: cyclic quartic (the F_81 constant field).
        let field = f3();
        let eps = field.nonsquare();
        let order = QuadOrder::new(&field, Poly::constant(eps)).unwrap();
        // generator of F_9 = F_3(y), y = sqrt(-1): y + 1 has norm
        // (1+y)(1-y) = 1 - y^2 = 1 + 1 = 2 = eps
        let alpha = QuadElt::new(Poly::one(), Poly::one());
        assert_eq!(order.norm(&field, &alpha), Poly::constant(eps));
        assert_eq!(classify_tower(&field, &order, &alpha).unwrap(), QuarticLabel::C4);
        assert!(oracle_agrees(&field, &order, &alpha, QuarticLabel::C4, 4).unwrap());
    }

    #[test]
    fn y_over_cubic_base() {
        // alpha = y over K = F(sqrt(x^3 - x)): N = -(x^3 - x); at q = 3
        // -1 is not a square so N is not in the class of the radicand:
        // D4, confirmed by the splitting oracle.
        let field = f3();
        let g = Poly::from_coeffs(vec![0, 2, 0, 1]);
        let order = QuadOrder::new(&field, g).unwrap();
        let alpha = QuadElt::new(Poly::zero(), Poly::one());
        let label = classify_tower(&field, &order, &alpha).unwrap();
        assert_eq!(label, QuarticLabel::D4);
        assert!(oracle_agrees(&field, &order, &alpha, label, 4).unwrap());
    }

    #[test]
    fn rejects_squares() {
        let field = f3();
        let order = QuadOrder::new(&field, Poly::x()).unwrap();
        let sq = QuadElt::from_base(Poly::from_coeffs(vec![0, 0, 1]));
        assert!(classify_tower(&field, &order, &sq).is_err());
    }
}
