//! Factorization in F_q[x]: square-free decomposition, distinct-degree
//! splitting, and randomized equal-degree splitting with a fixed seed so
//! every run factors identically.

use super::field::{Elt, Field};
use super::poly::Poly;
use crate::error::Error;
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A complete factorization: unit times monic irreducible powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Elt,
    /// (monic irreducible, multiplicity >= 1), sorted by (degree, coeffs).
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self, field: &Field) -> Poly {
        let mut acc = Poly::constant(self.unit);
        for (p, m) in &self.factors {
            for _ in 0..*m {
                acc = field.pmul(&acc, p);
            }
        }
        acc
    }

    /// Number of distinct irreducible factors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, m)| m == 1)
    }

    /// Degrees of the distinct irreducible factors.
    pub fn factor_degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|(p, _)| p.deg()).collect()
    }
}

fn fnv_seed(field: &Field, f: &Poly) -> [u8; 32] {
    // stable FNV-1a fold over (q, coefficients); rand's StdRng is not
    // guaranteed stable across releases, ChaCha with this seed is.
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |x: u64| {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(field.q() as u64);
    for &c in &f.0 {
        eat(c as u64);
    }
    let mut seed = [0u8; 32];
    for (i, chunk) in seed.chunks_exact_mut(8).enumerate() {
        let v = h.wrapping_add(0x9e3779b97f4a7c15u64.wrapping_mul(i as u64 + 1));
        chunk.copy_from_slice(&v.to_le_bytes());
    }
    seed
}

impl Field {
    /// True iff gcd(f, f') is constant.  Rejects the zero polynomial.
    pub fn is_squarefree(&self, f: &Poly) -> Result<bool, Error> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.is_constant() {
            return Ok(true);
        }
        let d = self.pderiv(f);
        if d.is_zero() {
            // f = g(x^p), a p-th power times non-units: never square-free
            return Ok(false);
        }
        Ok(self.pgcd(f, &d).is_one())
    }

    /// Square-free decomposition: returns pairs (g_i, i) with f = unit * prod g_i^i,
    /// each g_i square-free, pairwise coprime, monic.  Char-p aware.
    fn squarefree_decomposition(&self, f: &Poly) -> Vec<(Poly, u32)> {
        let p = self.p();
        let f = self.pmonic(f);
        if f.is_one() {
            return Vec::new();
        }
        let df = self.pderiv(&f);
        if df.is_zero() {
            // f = g(x^p); take p-th roots of coefficients and recurse
            let mut g = Vec::new();
            for (i, &c) in f.0.iter().enumerate() {
                if i % p as usize == 0 {
                    // c^{1/p} = c^{p^{e-1}}
                    let mut root = c;
                    for _ in 0..self.ext_degree().saturating_sub(1) {
                        root = self.pow(root, p as u64);
                    }
                    g.push(root);
                } else {
                    debug_assert_eq!(c, 0);
                }
            }
            let inner = self.squarefree_decomposition(&Poly::from_coeffs(g));
            return inner.into_iter().map(|(q, m)| (q, m * p)).collect();
        }
        // classical char-p loop: strip multiplicities not divisible by p,
        // then recurse on the residual polynomial in x^p
        let mut c = self.pgcd(&f, &df);
        let mut w = self.pdivrem(&f, &c).0;
        let mut out: Vec<(Poly, u32)> = Vec::new();
        let mut i = 1u32;
        while !w.is_one() {
            let y = self.pgcd(&w, &c);
            let gi = self.pdivrem(&w, &y).0;
            if !gi.is_one() {
                out.push((gi, i));
            }
            w = y.clone();
            c = self.pdivrem(&c, &y).0;
            i += 1;
        }
        if !c.is_one() {
            for (g, m) in self.squarefree_decomposition(&c) {
                out.push((g, m));
            }
        }
        // merge duplicates defensively
        out.sort_by(|x, y| x.0.cmp(&y.0));
        let mut merged: Vec<(Poly, u32)> = Vec::new();
        for (g, m) in out {
            if let Some(last) = merged.last_mut() {
                if last.0 == g {
                    last.1 += m;
                    continue;
                }
            }
            merged.push((g, m));
        }
        merged
    }

    /// Distinct-degree splitting of a monic square-free f: returns pairs
    /// (product of irreducible factors of degree d, d).
    fn distinct_degree_split(&self, f: &Poly) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut rem = f.clone();
        let mut d = 0usize;
        // h = x^{q^d} mod rem, advanced incrementally
        let mut h = Poly::x();
        while let Some(deg) = rem.degree() {
            if deg == 0 {
                break;
            }
            d += 1;
            if 2 * d > deg {
                // whatever is left is irreducible
                out.push((rem.clone(), deg));
                break;
            }
            h = self.pmodpow(&self.prem(&h, &rem), self.q() as u64, &rem);
            let diff = self.psub(&h, &Poly::x());
            let g = self.pgcd(&rem, &diff);
            if !g.is_one() {
                rem = self.pdivrem(&rem, &g).0;
                h = self.prem(&h, &rem);
                out.push((g, d));
            }
        }
        out
    }

    /// Cantor–Zassenhaus equal-degree splitting of a monic square-free
    /// product of degree-d irreducibles.
    fn equal_degree_split(&self, f: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
        let deg = f.deg();
        if deg == d {
            out.push(f.clone());
            return;
        }
        let exponent = (BigUint::from(self.q()).pow(d as u32) - BigUint::one()) >> 1;
        loop {
            // random nonconstant poly of degree < deg
            let mut coeffs = vec![0 as Elt; deg];
            for c in coeffs.iter_mut() {
                *c = rng.gen_range(0..self.q());
            }
            let a = Poly::from_coeffs(coeffs);
            if a.is_constant() {
                continue;
            }
            let g0 = self.pgcd(&a, f);
            let g = if !g0.is_one() && g0.deg() < deg {
                g0
            } else {
                let b = self.pmodpow_big(&a, &exponent, f);
                let g = self.pgcd(&self.psub(&b, &Poly::one()), f);
                if g.is_one() || g.deg() == deg {
                    continue;
                }
                g
            };
            let h = self.pdivrem(f, &g).0;
            self.equal_degree_split(&g, d, rng, out);
            self.equal_degree_split(&h, d, rng, out);
            return;
        }
    }

    /// Complete factorization into monic irreducibles.  Deterministic: the
    /// equal-degree stage is seeded from (q, f).
    pub fn factor_poly(&self, f: &Poly) -> Result<Factorization, Error> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let unit = f.leading();
        let monic = self.pmonic(f);
        let mut rng = ChaCha8Rng::from_seed(fnv_seed(self, f));
        let mut factors: Vec<(Poly, u32)> = Vec::new();
        for (g, mult) in self.squarefree_decomposition(&monic) {
            for (h, d) in self.distinct_degree_split(&g) {
                let mut irr = Vec::new();
                self.equal_degree_split(&h, d, &mut rng, &mut irr);
                for p in irr {
                    factors.push((p, mult));
                }
            }
        }
        factors.sort_by(|x, y| (x.0.deg(), &x.0).cmp(&(y.0.deg(), &y.0)));
        let fact = Factorization { unit, factors };
        debug_assert_eq!(fact.expand(self), *f);
        Ok(fact)
    }

    /// Irreducibility test for a nonconstant polynomial.
    pub fn is_irreducible(&self, f: &Poly) -> bool {
        if f.is_zero() || f.is_constant() {
            return false;
        }
        let n = f.deg();
        if n == 1 {
            return true;
        }
        let monic = self.pmonic(f);
        // Rabin: x^{q^n} = x mod f, and gcd(x^{q^{n/r}} - x, f) = 1
        let q = self.q() as u64;
        let mut frob = Poly::x();
        let mut frobs = vec![Poly::x()];
        for _ in 0..n {
            frob = self.pmodpow(&frob, q, &monic);
            frobs.push(frob.clone());
        }
        if frobs[n] != self.prem(&Poly::x(), &monic) {
            return false;
        }
        let mut primes = Vec::new();
        let mut m = n;
        let mut d = 2usize;
        while d * d <= m {
            if m % d == 0 {
                primes.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        for r in primes {
            let g = self.pgcd(&self.psub(&frobs[n / r], &Poly::x()), &monic);
            if !g.is_one() {
                return false;
            }
        }
        true
    }

    /// Number of distinct irreducible factors of degree <= bound.
    pub fn omega_bounded(&self, f: &Poly, bound: usize) -> Result<usize, Error> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.is_constant() || bound == 0 {
            return Ok(0);
        }
        // distinct-factor radical, then distinct-degree counting
        let radical = self.radical(f)?;
        Ok(self
            .distinct_degree_split(&radical)
            .into_iter()
            .filter(|&(_, d)| d <= bound)
            .map(|(g, d)| g.deg() / d)
            .sum())
    }

    /// Product of the distinct monic irreducible factors.
    pub fn radical(&self, f: &Poly) -> Result<Poly, Error> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut acc = Poly::one();
        for (g, _) in self.squarefree_decomposition(&self.pmonic(f)) {
            acc = self.pmul(&acc, &g);
        }
        Ok(acc)
    }

    /// Factor-degree multiset of a square-free polynomial (sorted), by
    /// distinct-degree splitting alone.
    pub fn factor_type_squarefree(&self, f: &Poly) -> Vec<usize> {
        let monic = self.pmonic(f);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree_split(&monic) {
            for _ in 0..g.deg() / d {
                out.push(d);
            }
        }
        out.sort_unstable();
        out
    }

    /// ω_T used by the statistics scans: distinct-degree counting on an
    /// already square-free monic input (skips the square-free stage).
    pub fn omega_bounded_squarefree(&self, f: &Poly, bound: usize) -> usize {
        self.distinct_degree_split(f)
            .into_iter()
            .filter(|&(_, d)| d <= bound)
            .map(|(g, d)| g.deg() / d)
            .sum()
    }

    /// Exact number of monic irreducible polynomials of degree d, by the
    /// Möbius necklace formula (1/d) Σ_{e|d} μ(e) q^{d/e}.
    pub fn count_irreducible(&self, d: usize) -> BigInt {
        assert!(d >= 1);
        let q = BigInt::from(self.q());
        let mut total = BigInt::from(0);
        for e in 1..=d {
            if d % e != 0 {
                continue;
            }
            let mu = moebius(e);
            if mu == 0 {
                continue;
            }
            total += BigInt::from(mu) * q.pow((d / e) as u32);
        }
        let (quot, rem) = num_integer::div_rem(total, BigInt::from(d));
        debug_assert!(num_traits::Zero::is_zero(&rem));
        quot
    }
}

/// Möbius function on small integers.
pub fn moebius(mut n: usize) -> i64 {
    let mut mu = 1i64;
    let mut d = 2usize;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::new(3, 1, None).unwrap()
    }
    fn f5() -> Field {
        Field::new(5, 1, None).unwrap()
    }

    #[test]
    fn factor_x2_minus_x() {
        let f = f3();
        // x^2 - x = x(x - 1): roots 0 and 1
        let a = Poly::from_coeffs(vec![0, 2, 1]);
        let fact = f.factor_poly(&a).unwrap();
        assert_eq!(fact.unit, 1);
        assert_eq!(fact.factors.len(), 2);
        assert!(fact.factors.iter().all(|&(_, m)| m == 1));
        assert_eq!(fact.expand(&f), a);
    }

    #[test]
    fn x2_plus_1_irreducible_over_f3() {
        let f = f3();
        let a = Poly::from_coeffs(vec![1, 0, 1]);
        // oracle: exhaustive root search plus the degree-2 criterion
        assert!(f.elements().all(|x| f.peval(&a, x) != 0));
        assert!(f.is_irreducible(&a));
        let fact = f.factor_poly(&a).unwrap();
        assert_eq!(fact.factors, vec![(a, 1)]);
    }

    #[test]
    fn x4_over_f5_is_prime_power() {
        let f = f5();
        let a = Poly::from_coeffs(vec![0, 0, 0, 0, 1]);
        let fact = f.factor_poly(&a).unwrap();
        assert_eq!(fact.factors, vec![(Poly::x(), 4)]);
    }

    #[test]
    fn squarefree_matches_factorization() {
        let f3 = f3();
        // exhaustive scan: all monic f with deg <= 5, q = 3
        for deg in 1..=5usize {
            let total = 3u64.pow(deg as u32);
            for k in 0..total {
                let mut coeffs = Vec::with_capacity(deg + 1);
                let mut t = k;
                for _ in 0..deg {
                    coeffs.push((t % 3) as Elt);
                    t /= 3;
                }
                coeffs.push(1);
                let fpoly = Poly::from_coeffs(coeffs);
                let by_gcd = f3.is_squarefree(&fpoly).unwrap();
                let by_factor = f3.factor_poly(&fpoly).unwrap().is_squarefree();
                assert_eq!(by_gcd, by_factor, "mismatch at {}", fpoly.to_text());
            }
        }
    }

    #[test]
    fn char_p_powers_decompose() {
        let f = f3();
        // (x^3 + 2x + 1)^3 has zero derivative
        let base = Poly::from_coeffs(vec![1, 2, 0, 1]);
        let cube = f.pmul(&f.pmul(&base, &base), &base);
        assert!(!f.is_squarefree(&cube).unwrap());
        let fact = f.factor_poly(&cube).unwrap();
        assert_eq!(fact.expand(&f), cube);
        assert!(fact.factors.iter().all(|&(_, m)| m == 3));
    }

    #[test]
    fn count_irreducible_small() {
        let f3 = f3();
        assert_eq!(f3.count_irreducible(1), BigInt::from(3));
        // oracle: exhaustive irreducibility testing of all monic quadratics
        let mut by_scan = 0;
        for a in 0..3 {
            for b in 0..3 {
                let p = Poly::from_coeffs(vec![a, b, 1]);
                if f3.is_irreducible(&p) {
                    by_scan += 1;
                }
            }
        }
        assert_eq!(by_scan, 3);
        assert_eq!(f3.count_irreducible(2), BigInt::from(3));
        let f5 = f5();
        assert_eq!(f5.count_irreducible(3), BigInt::from(40)); // (125-5)/3
    }

    #[test]
    fn necklace_identity() {
        // sum_{d|n} d pi(d) = q^n for n <= 12
        for q in [3u64, 5] {
            let f = Field::new(q, 1, None).unwrap();
            for n in 1..=12usize {
                let mut total = BigInt::from(0);
                for d in 1..=n {
                    if n % d == 0 {
                        total += BigInt::from(d) * f.count_irreducible(d);
                    }
                }
                assert_eq!(total, BigInt::from(q).pow(n as u32));
            }
        }
    }

    #[test]
    fn omega_bounded_examples() {
        let f = f3();
        // x(x+1)(x^2+1): two linear factors, one quadratic
        let a = f.pmul(
            &f.pmul(&Poly::x(), &Poly::from_coeffs(vec![1, 1])),
            &Poly::from_coeffs(vec![1, 0, 1]),
        );
        assert_eq!(f.omega_bounded(&a, 1).unwrap(), 2);
        assert_eq!(f.omega_bounded(&a, 2).unwrap(), 3);
        let b = Poly::from_coeffs(vec![1, 0, 1]);
        assert_eq!(f.omega_bounded(&b, 1).unwrap(), 0);
    }

    #[test]
    fn factor_is_deterministic() {
        let f = f5();
        // a polynomial with several equal-degree factors
        let a = f.pmul(
            &f.pmul(&Poly::from_coeffs(vec![2, 0, 1]), &Poly::from_coeffs(vec![3, 0, 1])),
            &Poly::from_coeffs(vec![1, 1]),
        );
        let f1 = f.factor_poly(&a).unwrap();
        let f2 = f.factor_poly(&a).unwrap();
        assert_eq!(f1, f2);
        assert_eq!(f1.omega(), 3);
    }
}
