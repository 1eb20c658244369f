//! Deterministic enumeration of monic polynomials.
//!
//! The stream of monic degree-n polynomials is indexed by k in 0..q^n:
//! the lower coefficients are the base-q digits of k, least significant
//! digit = constant term, so the constant term varies fastest.  Streams
//! are restartable and can be partitioned into contiguous index ranges
//! for parallel consumption.

use super::field::Field;
use super::poly::Poly;

/// The k-th monic polynomial of degree n.
pub fn monic_by_index(field: &Field, n: usize, k: u64) -> Poly {
    let q = field.q() as u64;
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut t = k;
    for _ in 0..n {
        coeffs.push((t % q) as u32);
        t /= q;
    }
    debug_assert_eq!(t, 0);
    coeffs.push(1);
    Poly::from_coeffs(coeffs)
}

/// Number of monic polynomials of degree n.
pub fn monic_count(field: &Field, n: usize) -> u64 {
    (field.q() as u64).pow(n as u32)
}

/// All monic polynomials of degree n, in index order.
pub fn enumerate_monic<'f>(field: &'f Field, n: usize) -> impl Iterator<Item = Poly> + 'f {
    (0..monic_count(field, n)).map(move |k| monic_by_index(field, n, k))
}

/// The square-free members of `enumerate_monic(n)`, same order.
pub fn enumerate_squarefree_monic<'f>(
    field: &'f Field,
    n: usize,
) -> impl Iterator<Item = Poly> + 'f {
    enumerate_monic(field, n).filter(move |f| field.is_squarefree(f).unwrap())
}

/// #P_n: q^n - q^{n-1} for n >= 2, q for n = 1, 1 for n = 0.
pub fn squarefree_monic_count(field: &Field, n: usize) -> u64 {
    let q = field.q() as u64;
    match n {
        0 => 1,
        1 => q,
        _ => q.pow(n as u32) - q.pow(n as u32 - 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn monic_linears_over_f3() {
        let f = Field::new(3, 1, None).unwrap();
        let all: Vec<Poly> = enumerate_monic(&f, 1).collect();
        assert_eq!(
            all,
            vec![
                Poly::from_coeffs(vec![0, 1]),
                Poly::from_coeffs(vec![1, 1]),
                Poly::from_coeffs(vec![2, 1]),
            ]
        );
    }

    #[test]
    fn monic_counts() {
        let f = Field::new(3, 1, None).unwrap();
        assert_eq!(enumerate_monic(&f, 2).count(), 9);
        let f5 = Field::new(5, 1, None).unwrap();
        // 125 items, no duplicates
        let set: HashSet<Poly> = enumerate_monic(&f5, 3).collect();
        assert_eq!(set.len(), 125);
    }

    #[test]
    fn squarefree_counts_match_formula() {
        // #P_n = q^n - q^{n-1} for n >= 2 (n = 1: all q linears)
        let f3 = Field::new(3, 1, None).unwrap();
        assert_eq!(enumerate_squarefree_monic(&f3, 2).count(), 6);
        assert_eq!(enumerate_squarefree_monic(&f3, 1).count(), 3);
        for n in 2..=6 {
            assert_eq!(
                enumerate_squarefree_monic(&f3, n).count() as u64,
                squarefree_monic_count(&f3, n)
            );
        }
        let f5 = Field::new(5, 1, None).unwrap();
        assert_eq!(enumerate_squarefree_monic(&f5, 4).count(), 500);
        let f9 = Field::new(3, 2, None).unwrap();
        assert_eq!(
            enumerate_squarefree_monic(&f9, 2).count() as u64,
            squarefree_monic_count(&f9, 2)
        );
    }
}
