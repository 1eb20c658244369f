//! Polynomials over F_q, coefficients lowest degree first.
//!
//! The zero polynomial is the empty coefficient vector; otherwise the
//! leading coefficient is nonzero.  Arithmetic lives on [`Field`] so a
//! polynomial is just data.

use super::field::{Elt, Field};
use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Poly(pub Vec<Elt>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![1])
    }

    /// x
    pub fn x() -> Poly {
        Poly(vec![0, 1])
    }

    pub fn constant(c: Elt) -> Poly {
        if c == 0 {
            Poly::zero()
        } else {
            Poly(vec![c])
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<Elt>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Degree with deg 0 for constants; panics on zero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn leading(&self) -> Elt {
        *self.0.last().expect("leading coefficient of zero")
    }

    pub fn coeff(&self, i: usize) -> Elt {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.0.last() == Some(&1)
    }

    /// Comma-separated residues, lowest first: x^2 + 2x over F_3 is "0,2,1".
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        parts.join(",")
    }

    pub fn parse(field: &Field, s: &str) -> Result<Poly, Error> {
        let mut coeffs = Vec::new();
        for tok in s.split(',') {
            let c: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {tok}")))?;
            if c >= field.q() {
                return Err(Error::Parse(format!(
                    "coefficient {c} out of range for q = {}",
                    field.q()
                )));
            }
            coeffs.push(c);
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}

impl Field {
    pub fn padd(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.0.len().max(b.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.add(a.coeff(i), b.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn psub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.0.len().max(b.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.sub(a.coeff(i), b.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn pneg(&self, a: &Poly) -> Poly {
        Poly(a.0.iter().map(|&c| self.neg(c)).collect())
    }

    pub fn pmul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0 as Elt; a.0.len() + b.0.len() - 1];
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(ai, bj));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pscale(&self, a: &Poly, c: Elt) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly(a.0.iter().map(|&x| self.mul(x, c)).collect())
    }

    /// Quotient and remainder; panics if b is zero.
    pub fn pdivrem(&self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        assert!(!b.is_zero(), "polynomial division by zero");
        if a.0.len() < b.0.len() {
            return (Poly::zero(), a.clone());
        }
        let mut rem = a.0.clone();
        let db = b.deg();
        let inv_lead = self.inv(b.leading());
        let mut quot = vec![0 as Elt; rem.len() - db];
        while rem.len() >= b.0.len() && !rem.is_empty() {
            let c = self.mul(*rem.last().unwrap(), inv_lead);
            let shift = rem.len() - 1 - db;
            quot[shift] = c;
            for (i, &bi) in b.0.iter().enumerate() {
                rem[shift + i] = self.sub(rem[shift + i], self.mul(c, bi));
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn prem(&self, a: &Poly, b: &Poly) -> Poly {
        self.pdivrem(a, b).1
    }

    /// Extended gcd: returns (g, s, t) with s a + t b = g, g monic.
    pub fn pxgcd(&self, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = self.pdivrem(&r0, &r1);
            let ns = self.psub(&s0, &self.pmul(&q, &s1));
            let nt = self.psub(&t0, &self.pmul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = ns;
            t0 = t1;
            t1 = nt;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let c = self.inv(r0.leading());
        (self.pscale(&r0, c), self.pscale(&s0, c), self.pscale(&t0, c))
    }

    /// Inverse of a mod m when gcd(a, m) = 1.
    pub fn pinvmod(&self, a: &Poly, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.pxgcd(a, m);
        if g.is_one() {
            Some(self.prem(&s, m))
        } else {
            None
        }
    }

    /// Monic gcd, with gcd(0, 0) = 0.
    pub fn pgcd(&self, a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = self.prem(&a, &b);
            a = b;
            b = r;
        }
        self.pmonic(&a)
    }

    /// Scales to a monic polynomial (zero stays zero).
    pub fn pmonic(&self, a: &Poly) -> Poly {
        if a.is_zero() || a.is_monic() {
            return a.clone();
        }
        self.pscale(a, self.inv(a.leading()))
    }

    pub fn pderiv(&self, a: &Poly) -> Poly {
        if a.0.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(a.0.len() - 1);
        for (i, &c) in a.0.iter().enumerate().skip(1) {
            let m = self.from_int(i as i64);
            out.push(self.mul(c, m));
        }
        Poly::from_coeffs(out)
    }

    pub fn peval(&self, a: &Poly, x: Elt) -> Elt {
        let mut acc = 0;
        for &c in a.0.iter().rev() {
            acc = self.add(self.mul(acc, x), c);
        }
        acc
    }

    /// Evaluation in an extension field via an embedding table for the
    /// coefficients.
    pub fn peval_embedded(&self, a: &Poly, big: &Field, table: &[Elt], x: Elt) -> Elt {
        let mut acc = 0;
        for &c in a.0.iter().rev() {
            acc = big.add(big.mul(acc, x), table[c as usize]);
        }
        acc
    }

    /// a^k mod m by square and multiply, with a big-integer exponent.
    pub fn pmodpow_big(&self, a: &Poly, k: &num_bigint::BigUint, m: &Poly) -> Poly {
        use num_traits::Zero;
        let mut base = self.prem(a, m);
        let mut acc = Poly::one();
        let bits = k.bits();
        if k.is_zero() {
            return acc;
        }
        for i in 0..bits {
            if k.bit(i) {
                acc = self.prem(&self.pmul(&acc, &base), m);
            }
            if i + 1 < bits {
                base = self.prem(&self.pmul(&base, &base), m);
            }
        }
        acc
    }

    pub fn pmodpow(&self, a: &Poly, k: u64, m: &Poly) -> Poly {
        self.pmodpow_big(a, &num_bigint::BigUint::from(k), m)
    }

    /// Exact square root of a perfect-square polynomial.
    pub fn psqrt_exact(&self, a: &Poly) -> Option<Poly> {
        if a.is_zero() {
            return Some(Poly::zero());
        }
        let d = a.deg();
        if d % 2 != 0 {
            return None;
        }
        let lead_root = self.sqrt(a.leading())?;
        let h = d / 2;
        // solve top-down for the coefficients of s with s^2 = a
        let mut s = vec![0 as Elt; h + 1];
        s[h] = lead_root;
        for i in (0..h).rev() {
            // coefficient of x^{i+h} in s^2 must equal a's
            let mut acc = 0;
            for j in (i + 1)..=h {
                let k = i + h - j;
                if k > h || k <= i {
                    continue;
                }
                acc = self.add(acc, self.mul(s[j], s[k]));
            }
            let target = self.sub(a.coeff(i + h), acc);
            s[i] = self.mul(target, self.inv(self.mul(2 % self.q(), lead_root)));
        }
        let s = Poly::from_coeffs(s);
        if self.pmul(&s, &s) == *a {
            Some(s)
        } else {
            None
        }
    }

    /// Whether f is a square in F_q[x].
    pub fn pis_square(&self, a: &Poly) -> bool {
        self.psqrt_exact(a).is_some()
    }

    /// Human-readable rendering such as `x^2 + 2x + 1`.
    pub fn poly_string(&self, a: &Poly) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in a.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { format!("{c}") };
            let var = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            parts.push(format!("{coef}{var}"));
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::new(3, 1, None).unwrap()
    }

    #[test]
    fn divrem_roundtrip() {
        let f = f3();
        let a = Poly::from_coeffs(vec![1, 2, 0, 1, 2]);
        let b = Poly::from_coeffs(vec![2, 1, 1]);
        let (q, r) = f.pdivrem(&a, &b);
        assert!(r.degree().unwrap_or(0) < b.deg() || r.is_zero());
        assert_eq!(f.padd(&f.pmul(&q, &b), &r), a);
    }

    #[test]
    fn gcd_of_x2_minus_x() {
        let f = f3();
        // x^2 - x = x(x-1); gcd with derivative 2x - 1 is 1
        let a = Poly::from_coeffs(vec![0, 2, 1]);
        let d = f.pderiv(&a);
        assert_eq!(d, Poly::from_coeffs(vec![2, 2]));
        assert!(f.pgcd(&a, &d).is_one());
    }

    #[test]
    fn eval_and_embedded_eval_agree() {
        let f = f3();
        let big = Field::new(3, 2, None).unwrap();
        let t = f.embedding_into(&big).unwrap();
        let a = Poly::from_coeffs(vec![1, 0, 2, 1]);
        for x in f.elements() {
            assert_eq!(t[f.peval(&a, x) as usize], f.peval_embedded(&a, &big, &t, t[x as usize]));
        }
    }

    #[test]
    fn sqrt_exact() {
        let f = Field::new(5, 1, None).unwrap();
        let s = Poly::from_coeffs(vec![3, 1, 2]);
        let sq = f.pmul(&s, &s);
        let r = f.psqrt_exact(&sq).unwrap();
        assert_eq!(f.pmul(&r, &r), sq);
        // a non-square: x
        assert!(f.psqrt_exact(&Poly::x()).is_none());
        // square times non-square leading coefficient over F_3: 2x^2
        let f = f3();
        assert!(f.psqrt_exact(&Poly::from_coeffs(vec![0, 0, 2])).is_none());
    }

    #[test]
    fn text_roundtrip() {
        let f = f3();
        let a = Poly::from_coeffs(vec![0, 2, 1]);
        assert_eq!(a.to_text(), "0,2,1");
        assert_eq!(Poly::parse(&f, "0,2,1").unwrap(), a);
        assert_eq!(f.poly_string(&a), "x^2 + 2x");
    }
}
