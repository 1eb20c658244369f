//! The finite field F_q, q = p^e with p an odd prime.
//!
//! Elements are stored as `u32` indices: the element with coordinate
//! vector (c_0, ..., c_{e-1}) relative to the defining modulus has index
//! c_0 + c_1 p + ... + c_{e-1} p^{e-1}.  Prime-field elements are their
//! own residues.  Multiplication, inversion, square roots and the
//! quadratic character all go through discrete log tables, which is why
//! the supported range is capped at q <= 2^16.

use crate::error::Error;
use std::fmt;

/// Largest supported field cardinality.
pub const MAX_Q: u64 = 1 << 16;

/// A field element, encoded as an index below q.
pub type Elt = u32;

/// Preferred defining moduli for small extension fields, as coefficient
/// vectors over F_p (lowest degree first, including the leading 1).
/// Entries are verified irreducible at construction time.
const MODULUS_TABLE: &[(u32, u32, &[u32])] = &[
    (3, 2, &[1, 0, 1]),    // z^2 + 1
    (3, 3, &[1, 2, 0, 1]), // z^3 + 2z + 1
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 0, 1]), // z^2 + 2
    (5, 3, &[1, 1, 0, 1]), // z^3 + z + 1
    (7, 2, &[1, 0, 1]), // z^2 + 1
    (7, 3, &[1, 1, 0, 1]),
    (11, 2, &[1, 0, 1]),
    (13, 2, &[2, 0, 1]),
];

/// The field F_q together with its arithmetic tables.
#[derive(Clone)]
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    /// Defining modulus over F_p, lowest first, monic of degree e.
    /// For e = 1 this is `[−? , 1]`-free: just `[0, 1]` placeholder is not
    /// stored; the vector is empty.
    modulus: Vec<u32>,
    /// exp[i] = g^i for 0 <= i < q-1, g the canonical generator.
    exp: Vec<u32>,
    /// log[x] defined for 1 <= x < q; log[exp[i]] = i.
    log: Vec<u32>,
    /// Canonical generator of F_q^* (smallest index that is primitive).
    generator: u32,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(q={})", self.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}
impl Eq for Field {}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == d {
            return true;
        }
        if n % d == 0 {
            return false;
        }
    }
    let mut d = 37u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Multiplication of coordinate vectors mod (p, modulus); used only while
/// bootstrapping the log tables.
fn raw_mul(p: u64, modulus: &[u32], a: &[u64], b: &[u64]) -> Vec<u64> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * e - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // reduce by the monic modulus
    for k in (e..prod.len()).rev() {
        let c = prod[k];
        if c != 0 {
            prod[k] = 0;
            for (i, &mi) in modulus.iter().enumerate().take(e) {
                let idx = k - e + i;
                prod[idx] = (prod[idx] + c * (p - mi as u64) % p) % p;
            }
        }
    }
    prod.truncate(e);
    prod
}

impl Field {
    /// Builds F_q for q = p^e.  `modulus` must be monic of degree e over
    /// F_p when given; when absent, a table entry or a deterministic
    /// lexicographic search supplies one.  Rejects p = 2 and composite p.
    pub fn new(p: u64, e: u32, modulus: Option<Vec<u32>>) -> Result<Field, Error> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::BadParameter("extension degree must be >= 1".into()));
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_Q).ok_or(
            Error::BadParameter(format!("q = {p}^{e} exceeds the supported bound 2^16")),
        )?;
        let p32 = p as u32;
        let modulus = if e == 1 {
            if let Some(m) = modulus {
                if !(m.len() == 2 && m[1] == 1) {
                    return Err(Error::BadParameter(
                        "modulus for a prime field must be linear monic".into(),
                    ));
                }
            }
            Vec::new()
        } else {
            let m = match modulus {
                Some(m) => m,
                None => Self::default_modulus(p32, e),
            };
            if m.len() != e as usize + 1 || m[e as usize] != 1 {
                return Err(Error::BadParameter(format!(
                    "modulus must be monic of degree {e}"
                )));
            }
            if m.iter().any(|&c| c >= p32) {
                return Err(Error::BadParameter("modulus coefficients must be reduced mod p".into()));
            }
            if !modulus_irreducible(p, &m) {
                return Err(Error::ReducibleModulus);
            }
            m
        };
        let mut f = Field {
            p: p32,
            e,
            q: q as u32,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            generator: 0,
        };
        f.build_tables();
        Ok(f)
    }

    fn default_modulus(p: u32, e: u32) -> Vec<u32> {
        for &(tp, te, coeffs) in MODULUS_TABLE {
            if tp == p && te == e {
                return coeffs.to_vec();
            }
        }
        // lexicographic search over (c_{e-1}, ..., c_0)
        let pe = (p as u64).pow(e);
        for k in 0..pe {
            let mut m = vec![0u32; e as usize + 1];
            let mut t = k;
            for c in m.iter_mut().take(e as usize) {
                *c = (t % p as u64) as u32;
                t /= p as u64;
            }
            m[e as usize] = 1;
            if modulus_irreducible(p as u64, &m) {
                return m;
            }
        }
        unreachable!("irreducible polynomials of every degree exist")
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let p = self.p as u64;
        let e = self.e as usize;
        // index <-> coordinate conversion plus raw multiplication
        let decode = |x: u32| -> Vec<u64> {
            let mut v = vec![0u64; e.max(1)];
            let mut t = x as u64;
            for d in v.iter_mut() {
                *d = t % p;
                t /= p;
            }
            v
        };
        let encode = |v: &[u64]| -> u32 {
            let mut x = 0u64;
            for &d in v.iter().rev() {
                x = x * p + d;
            }
            x as u32
        };
        let mul = |a: u32, b: u32| -> u32 {
            if e == 1 {
                ((a as u64 * b as u64) % p) as u32
            } else {
                encode(&raw_mul(p, &self.modulus, &decode(a), &decode(b)))
            }
        };
        // order of the multiplicative group and its prime factors
        let order = (q - 1) as u64;
        let mut factors = Vec::new();
        let mut n = order;
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                factors.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            factors.push(n);
        }
        let pow = |mut base: u32, mut k: u64| -> u32 {
            let mut acc = 1u32;
            while k > 0 {
                if k & 1 == 1 {
                    acc = mul(acc, base);
                }
                base = mul(base, base);
                k >>= 1;
            }
            acc
        };
        let mut gen = 0u32;
        for cand in 1..self.q {
            if factors.iter().all(|&f| pow(cand, order / f) != 1) {
                gen = cand;
                break;
            }
        }
        let mut exp = vec![0u32; q - 1];
        let mut log = vec![0u32; q];
        let mut acc = 1u32;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = mul(acc, gen);
        }
        debug_assert_eq!(acc, 1);
        self.exp = exp;
        self.log = log;
        self.generator = gen;
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn ext_degree(&self) -> u32 {
        self.e
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// q as an arbitrary-precision integer.
    pub fn q_big(&self) -> num_bigint::BigInt {
        num_bigint::BigInt::from(self.q)
    }
    /// Defining modulus coefficients (empty for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// The canonical generator of F_q^*.
    pub fn generator(&self) -> Elt {
        self.generator
    }
    /// The canonical non-square: the generator itself.
    pub fn nonsquare(&self) -> Elt {
        self.generator
    }

    /// Coordinates of `x` relative to the modulus, length e.
    pub fn coordinates(&self, x: Elt) -> Vec<u32> {
        let mut v = vec![0u32; self.e as usize];
        let mut t = x;
        for d in v.iter_mut() {
            *d = t % self.p;
            t /= self.p;
        }
        v
    }

    pub fn from_coordinates(&self, coords: &[u32]) -> Elt {
        let mut x = 0u64;
        for &c in coords.iter().rev() {
            debug_assert!(c < self.p);
            x = x * self.p as u64 + c as u64;
        }
        x as Elt
    }

    /// Embeds a residue 0 <= r < p (an F_p element) into this field.
    #[inline]
    pub fn from_prime_residue(&self, r: u32) -> Elt {
        debug_assert!(r < self.p);
        r
    }

    /// Reduction of an arbitrary signed integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> Elt {
        let p = self.p as i64;
        (((n % p) + p) % p) as Elt
    }

    #[inline]
    pub fn zero(&self) -> Elt {
        0
    }
    #[inline]
    pub fn one(&self) -> Elt {
        1
    }

    #[inline]
    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        if self.e == 1 {
            let s = a + b;
            if s >= self.q {
                s - self.q
            } else {
                s
            }
        } else {
            let p = self.p;
            let mut x = 0u32;
            let (mut a, mut b) = (a, b);
            let mut mult = 1u32;
            for _ in 0..self.e {
                let da = a % p;
                let db = b % p;
                let mut s = da + db;
                if s >= p {
                    s -= p;
                }
                x += s * mult;
                mult *= p;
                a /= p;
                b /= p;
            }
            x
        }
    }

    #[inline]
    pub fn neg(&self, a: Elt) -> Elt {
        if self.e == 1 {
            if a == 0 {
                0
            } else {
                self.q - a
            }
        } else {
            let p = self.p;
            let mut x = 0u32;
            let mut a = a;
            let mut mult = 1u32;
            for _ in 0..self.e {
                let d = a % p;
                x += if d == 0 { 0 } else { p - d } * mult;
                mult *= p;
                a /= p;
            }
            x
        }
    }

    #[inline]
    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        if a == 0 || b == 0 {
            return 0;
        }
        let la = self.log[a as usize] as u64;
        let lb = self.log[b as usize] as u64;
        self.exp[((la + lb) % (self.q as u64 - 1)) as usize]
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: Elt) -> Elt {
        assert!(a != 0, "division by zero in F_q");
        let la = self.log[a as usize] as u64;
        let o = self.q as u64 - 1;
        self.exp[((o - la) % o) as usize]
    }

    pub fn pow(&self, a: Elt, k: u64) -> Elt {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let la = self.log[a as usize] as u64;
        let o = self.q as u64 - 1;
        self.exp[((la % o * (k % o)) % o) as usize]
    }

    /// The quadratic character: 0 on zero, +1 on nonzero squares, -1 otherwise.
    #[inline]
    pub fn legendre(&self, a: Elt) -> i32 {
        if a == 0 {
            0
        } else if self.log[a as usize] % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A square root when one exists.  Deterministic: the root with even
    /// discrete log is returned.
    pub fn sqrt(&self, a: Elt) -> Option<Elt> {
        if a == 0 {
            return Some(0);
        }
        let la = self.log[a as usize];
        if la % 2 != 0 {
            return None;
        }
        Some(self.exp[(la / 2) as usize])
    }

    /// Iterator over every field element, 0 first.
    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        0..self.q
    }

    /// Embedding table into an extension of the same characteristic whose
    /// degree is a multiple of ours: `table[x]` is the image of `x`.
    /// Deterministic (smallest root of the modulus is used).
    pub fn embedding_into(&self, big: &Field) -> Result<Vec<Elt>, Error> {
        if big.p != self.p || big.e % self.e != 0 {
            return Err(Error::BadParameter(
                "no embedding: incompatible characteristic or degree".into(),
            ));
        }
        if self.e == 1 {
            return Ok((0..self.q).collect());
        }
        // smallest root of our modulus inside `big`
        let mut root = None;
        'outer: for z in big.elements() {
            let mut acc = big.zero();
            let mut zp = big.one();
            for &c in &self.modulus {
                acc = big.add(acc, big.mul(big.from_prime_residue(c), zp));
                zp = big.mul(zp, z);
            }
            if acc == 0 {
                root = Some(z);
                break 'outer;
            }
        }
        let root = root.ok_or_else(|| {
            Error::Internal("modulus has no root in the extension field".into())
        })?;
        let mut table = Vec::with_capacity(self.q as usize);
        for x in self.elements() {
            let coords = self.coordinates(x);
            let mut acc = big.zero();
            let mut rp = big.one();
            for &c in &coords {
                acc = big.add(acc, big.mul(big.from_prime_residue(c), rp));
                rp = big.mul(rp, root);
            }
            table.push(acc);
        }
        Ok(table)
    }

    /// Header form used by the text formats: `q=3` or `q=9;mod=1,0,1`.
    pub fn header(&self) -> String {
        if self.e == 1 {
            format!("q={}", self.q)
        } else {
            let m: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
            format!("q={};mod={}", self.q, m.join(","))
        }
    }

    /// Parses a field header produced by [`Field::header`].
    pub fn parse_header(s: &str) -> Result<Field, Error> {
        let mut q_part = s.trim();
        let mut mod_part = None;
        if let Some((a, b)) = s.split_once(';') {
            q_part = a.trim();
            let b = b.trim();
            let m = b
                .strip_prefix("mod=")
                .ok_or_else(|| Error::Parse(format!("expected mod=..., got {b}")))?;
            mod_part = Some(m);
        }
        let q: u64 = q_part
            .strip_prefix("q=")
            .ok_or_else(|| Error::Parse(format!("expected q=..., got {q_part}")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad cardinality in {q_part}")))?;
        // factor q as p^e
        let mut p = q;
        let mut e = 1u32;
        for cand in 2..=q {
            if cand * cand > q {
                break;
            }
            if q % cand == 0 {
                p = cand;
                let mut t = q;
                e = 0;
                while t % cand == 0 {
                    t /= cand;
                    e += 1;
                }
                if t != 1 {
                    return Err(Error::NotPrime(q));
                }
                break;
            }
        }
        let modulus = match mod_part {
            None => None,
            Some(m) => {
                let coeffs: Result<Vec<u32>, _> = m.split(',').map(|c| c.trim().parse()).collect();
                Some(coeffs.map_err(|_| Error::Parse(format!("bad modulus list {m}")))?)
            }
        };
        Field::new(p, e, modulus)
    }
}

/// Irreducibility of a monic polynomial over F_p by the derivative-free
/// Rabin test: x^{p^e} = x mod m and gcd(x^{p^{e/r}} - x, m) = 1 for all
/// prime r | e.  Self-contained so the field constructor can use it before
/// any `Field` exists.
fn modulus_irreducible(p: u64, m: &[u32]) -> bool {
    let e = m.len() - 1;
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    let m64: Vec<u64> = m.iter().map(|&c| c as u64).collect();
    let mulmod = |a: &[u64], b: &[u64]| -> Vec<u64> { raw_mul(p, m, a, b) };
    let frob = |v: &[u64]| -> Vec<u64> {
        // v^p by square and multiply
        let mut acc = {
            let mut o = vec![0u64; e];
            o[0] = 1;
            o
        };
        let mut base = v.to_vec();
        let mut k = p;
        while k > 0 {
            if k & 1 == 1 {
                acc = mulmod(&acc, &base);
            }
            base = mulmod(&base, &base);
            k >>= 1;
        }
        acc
    };
    let x = {
        let mut v = vec![0u64; e];
        if e > 1 {
            v[1] = 1;
        }
        v
    };
    // distinct prime divisors of e
    let mut primes = Vec::new();
    let mut n = e;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            primes.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    // iterated Frobenius: fx[i] = x^{p^i} mod m
    let mut fx = x.clone();
    let mut frobs = vec![x.clone()];
    for _ in 0..e {
        fx = frob(&fx);
        frobs.push(fx.clone());
    }
    if frobs[e] != x {
        return false;
    }
    // gcd check at each maximal proper divisor e/r
    let poly_gcd = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let norm = |v: &mut Vec<u64>| {
            while v.last() == Some(&0) {
                v.pop();
            }
        };
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        norm(&mut a);
        norm(&mut b);
        while !b.is_empty() {
            // a mod b
            let inv_lead = {
                // Fermat inverse mod p
                let mut acc = 1u64;
                let mut base = *b.last().unwrap() % p;
                let mut k = p - 2;
                while k > 0 {
                    if k & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    k >>= 1;
                }
                acc
            };
            while a.len() >= b.len() && !a.is_empty() {
                let shift = a.len() - b.len();
                let c = *a.last().unwrap() % p * inv_lead % p;
                for (i, &bi) in b.iter().enumerate() {
                    a[shift + i] = (a[shift + i] + p * p - c * bi % p) % p;
                }
                norm(&mut a);
            }
            std::mem::swap(&mut a, &mut b);
        }
        a
    };
    for &r in &primes {
        let k = e / r;
        let mut diff = frobs[k].clone();
        // diff -= x
        if e > 1 {
            diff[1] = (diff[1] + p - 1) % p;
        }
        let g = poly_gcd(&m64, &diff);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_characteristic_two() {
        assert!(matches!(Field::new(2, 1, None), Err(Error::CharacteristicTwo)));
    }

    #[test]
    fn rejects_composite() {
        assert!(matches!(Field::new(9, 1, None), Err(Error::NotPrime(9))));
        assert!(matches!(Field::new(15, 1, None), Err(Error::NotPrime(15))));
    }

    #[test]
    fn rejects_reducible_modulus() {
        // z^2 - 1 = (z-1)(z+1) over F_3
        assert!(matches!(
            Field::new(3, 2, Some(vec![2, 0, 1])),
            Err(Error::ReducibleModulus)
        ));
    }

    #[test]
    fn f9_via_z2_plus_1() {
        // -1 is a non-residue mod 3, so z^2+1 is irreducible; oracle:
        // exhaustive root search over F_3.
        for z in 0..3u32 {
            assert_ne!((z * z + 1) % 3, 0);
        }
        let f = Field::new(3, 2, Some(vec![1, 0, 1])).unwrap();
        assert_eq!(f.q(), 9);
        // z has index 3; z^2 = -1 = 2
        let z = f.from_coordinates(&[0, 1]);
        assert_eq!(f.mul(z, z), 2);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::new(7, 1, None).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
        assert_eq!(f.neg(2), 5);
        // squares mod 7: 1, 2, 4
        let squares: Vec<u32> = (1..7).filter(|&a| f.legendre(a) == 1).collect();
        assert_eq!(squares, vec![1, 2, 4]);
    }

    #[test]
    fn sqrt_roundtrip_all_fields() {
        for (p, e) in [(3u64, 1u32), (3, 2), (5, 1), (5, 2), (7, 1), (3, 3)] {
            let f = Field::new(p, e, None).unwrap();
            for a in f.elements() {
                match f.sqrt(a) {
                    Some(r) => assert_eq!(f.mul(r, r), a),
                    None => assert_eq!(f.legendre(a), -1),
                }
            }
        }
    }

    #[test]
    fn generator_is_primitive_and_nonsquare() {
        for (p, e) in [(3u64, 1u32), (5, 1), (3, 2), (7, 1)] {
            let f = Field::new(p, e, None).unwrap();
            let g = f.generator();
            assert_eq!(f.legendre(g), -1);
            let mut seen = std::collections::HashSet::new();
            let mut acc = f.one();
            for _ in 0..f.q() - 1 {
                seen.insert(acc);
                acc = f.mul(acc, g);
            }
            assert_eq!(seen.len(), (f.q() - 1) as usize);
        }
    }

    #[test]
    fn embedding_preserves_ops() {
        let small = Field::new(3, 1, None).unwrap();
        let big = Field::new(3, 2, None).unwrap();
        let t = small.embedding_into(&big).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(t[small.add(a, b) as usize], big.add(t[a as usize], t[b as usize]));
                assert_eq!(t[small.mul(a, b) as usize], big.mul(t[a as usize], t[b as usize]));
            }
        }
        let f9 = Field::new(3, 2, None).unwrap();
        let f81 = Field::new(3, 4, None).unwrap();
        let t = f9.embedding_into(&f81).unwrap();
        for a in f9.elements() {
            for b in f9.elements() {
                assert_eq!(t[f9.mul(a, b) as usize], f81.mul(t[a as usize], t[b as usize]));
            }
        }
    }

    #[test]
    fn header_roundtrip() {
        for (p, e) in [(3u64, 1u32), (3, 2), (5, 3)] {
            let f = Field::new(p, e, None).unwrap();
            let g = Field::parse_header(&f.header()).unwrap();
            assert_eq!(f, g);
        }
    }

    #[test]
    fn modulus_table_entries_are_irreducible() {
        for &(p, e, coeffs) in MODULUS_TABLE {
            assert!(
                modulus_irreducible(p as u64, coeffs),
                "table entry ({p},{e}) is reducible"
            );
        }
    }
}
