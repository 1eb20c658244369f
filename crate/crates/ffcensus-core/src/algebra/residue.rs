//! The quadratic residue symbol (g | m) for polynomials over F_q.
//!
//! For an irreducible m the symbol is the quadratic character of the
//! residue field evaluated at g mod m; for general m it extends
//! multiplicatively over the factorization of m.  Computed here by the
//! F_q[x] reciprocity law
//!
//!   (f | g) (g | f) = (-1)^{(q-1)/2 * deg f * deg g}   (f, g monic coprime)
//!
//! together with (c | m) = chi(c)^{deg m} for constants c, so no
//! factorizations are needed.

use super::field::Field;
use super::poly::Poly;
use crate::error::Error;

impl Field {
    /// (g | m): 0 iff gcd(m, g) is nonconstant.  `g` must be square-free,
    /// `m` nonzero.
    pub fn jacobi_symbol(&self, m: &Poly, g: &Poly) -> Result<i32, Error> {
        if m.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !g.is_zero() && !g.is_constant() && !self.is_squarefree(g)? {
            return Err(Error::NotSquarefree);
        }
        Ok(self.residue_symbol(m, g))
    }

    /// (g | m) without the square-free guard; used internally where the
    /// caller already knows the conductor is valid.
    pub(crate) fn residue_symbol(&self, m: &Poly, g: &Poly) -> i32 {
        // chi(c) for constants, extended to the parity rule
        let chi = |c: u32| -> i32 { self.legendre(c) };
        let half_odd = (self.q() - 1) / 2 % 2 == 1; // whether (-1|.) can bite

        // strip m's unit part: symbols only see the monic factorization
        let mut m = self.pmonic(m);
        let mut g = g.clone();
        let mut sign = 1i32;
        loop {
            if m.is_constant() {
                // empty factorization
                return sign;
            }
            g = self.prem(&g, &m);
            if g.is_zero() {
                return 0;
            }
            // pull out the unit of g: (c | m) = chi(c)^{deg m}
            let c = g.leading();
            if c != 1 {
                let s = chi(c);
                if m.deg() % 2 == 1 {
                    sign *= s;
                }
                g = self.pmonic(&g);
            }
            if g.is_constant() {
                return sign;
            }
            // reciprocity flip for monic g, m
            if half_odd && g.deg() % 2 == 1 && m.deg() % 2 == 1 {
                sign = -sign;
            }
            std::mem::swap(&mut m, &mut g);
        }
    }

    /// Defining oracle for the symbol at an irreducible modulus: Euler's
    /// criterion (g mod m)^{(q^d - 1)/2} in F_q[x]/(m).
    pub fn residue_symbol_euler(&self, m: &Poly, g: &Poly) -> i32 {
        use num_bigint::BigUint;
        use num_traits::One;
        debug_assert!(self.is_irreducible(m));
        let r = self.prem(g, m);
        if r.is_zero() {
            return 0;
        }
        let exp = (BigUint::from(self.q()).pow(m.deg() as u32) - BigUint::one()) >> 1;
        let pw = self.pmodpow_big(&r, &exp, m);
        if pw.is_one() {
            1
        } else {
            debug_assert_eq!(self.padd(&pw, &Poly::one()), Poly::zero());
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate::enumerate_monic;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn linear_modulus_is_evaluation() {
        let f = Field::new(3, 1, None).unwrap();
        // (x | x+1) = chi(x at -1) = chi(-1) = -1 over F_3
        let m = Poly::from_coeffs(vec![1, 1]);
        let g = Poly::x();
        assert_eq!(f.jacobi_symbol(&m, &g).unwrap(), -1);
        assert_eq!(f.residue_symbol_euler(&m, &g), -1);
    }

    #[test]
    fn zero_when_gcd_nonconstant() {
        let f = Field::new(3, 1, None).unwrap();
        let m = f.pmul(&Poly::x(), &Poly::from_coeffs(vec![1, 1]));
        assert_eq!(f.jacobi_symbol(&m, &Poly::x()).unwrap(), 0);
    }

    #[test]
    fn rejects_non_squarefree_conductor() {
        let f = Field::new(3, 1, None).unwrap();
        let g = f.pmul(&Poly::x(), &Poly::x());
        assert!(matches!(
            f.jacobi_symbol(&Poly::from_coeffs(vec![1, 1]), &g),
            Err(Error::NotSquarefree)
        ));
    }

    #[test]
    fn matches_euler_criterion_on_irreducibles() {
        for q in [3u64, 5, 9] {
            let f = if q == 9 {
                Field::new(3, 2, None).unwrap()
            } else {
                Field::new(q, 1, None).unwrap()
            };
            let g = Poly::from_coeffs(vec![1, 2, 0, 1]); // x^3 + 2x + 1
            if !f.is_squarefree(&g).unwrap() {
                continue;
            }
            for d in 1..=3usize {
                for m in enumerate_monic(&f, d) {
                    if !f.is_irreducible(&m) {
                        continue;
                    }
                    assert_eq!(
                        f.jacobi_symbol(&m, &g).unwrap(),
                        f.residue_symbol_euler(&m, &g),
                        "q={q} m={} g={}",
                        m.to_text(),
                        g.to_text()
                    );
                }
            }
        }
    }

    #[test]
    fn multiplicative_in_first_argument() {
        // (m1 m2 | g)... symbol (g | m1 m2) = (g | m1)(g | m2) on 100 random triples;
        // oracle = factored evaluation through the euclidean route itself
        let f = Field::new(5, 1, None).unwrap();
        let mut rng = ChaCha8Rng::from_seed([7u8; 32]);
        let g = Poly::from_coeffs(vec![2, 1, 0, 1]);
        assert!(f.is_squarefree(&g).unwrap());
        let mut done = 0;
        while done < 100 {
            let d1 = rng.gen_range(1..4usize);
            let d2 = rng.gen_range(1..4usize);
            let m1 = crate::algebra::enumerate::monic_by_index(
                &f,
                d1,
                rng.gen_range(0..5u64.pow(d1 as u32)),
            );
            let m2 = crate::algebra::enumerate::monic_by_index(
                &f,
                d2,
                rng.gen_range(0..5u64.pow(d2 as u32)),
            );
            let prod = f.pmul(&m1, &m2);
            let lhs = f.jacobi_symbol(&prod, &g).unwrap();
            let rhs = f.jacobi_symbol(&m1, &g).unwrap() * f.jacobi_symbol(&m2, &g).unwrap();
            assert_eq!(lhs, rhs);
            done += 1;
        }
    }

    #[test]
    fn depends_on_residue_class_with_fixed_degree_parity() {
        // For monic m, m' with m = m' mod g and deg m = deg m' mod 2 the
        // symbols agree.  (Without the parity condition this fails for
        // q = 3: (x | x+1) = -1 but (x | (x-1)^2) = +1 with both moduli
        // congruent to 1 mod x.)
        let f = Field::new(3, 1, None).unwrap();
        let g = Poly::x();
        let m1 = Poly::from_coeffs(vec![1, 1]);
        let m2 = Poly::from_coeffs(vec![1, 1, 1]); // (x-1)^2 = x^2+x+1 over F_3
        assert_eq!(f.jacobi_symbol(&m1, &g).unwrap(), -1);
        assert_eq!(f.jacobi_symbol(&m2, &g).unwrap(), 1);

        for q in [3u64, 5] {
            let f = Field::new(q, 1, None).unwrap();
            let g = Poly::from_coeffs(vec![2, 0, 1]);
            if !f.is_squarefree(&g).unwrap() {
                continue;
            }
            let mut rng = ChaCha8Rng::from_seed([9u8; 32]);
            let mut checked = 0;
            for _ in 0..400 {
                let d = rng.gen_range(3..6usize);
                let m = crate::algebra::enumerate::monic_by_index(
                    &f,
                    d,
                    rng.gen_range(0..(f.q() as u64).pow(d as u32)),
                );
                // m' = m + g * h with deg(g h) < deg m keeps degree and parity
                let h = crate::algebra::enumerate::monic_by_index(
                    &f,
                    d - 3,
                    rng.gen_range(0..(f.q() as u64).pow((d - 3) as u32)),
                );
                let m2 = f.padd(&m, &f.pmul(&g, &h));
                assert_eq!(f.prem(&m, &g), f.prem(&m2, &g));
                let s1 = f.jacobi_symbol(&m, &g).unwrap();
                let s2 = f.jacobi_symbol(&m2, &g).unwrap();
                if s1 != 0 && s2 != 0 {
                    assert_eq!(s1, s2);
                    checked += 1;
                }
            }
            assert!(checked > 50);
        }
    }
}
