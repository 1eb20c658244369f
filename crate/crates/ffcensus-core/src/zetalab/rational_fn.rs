//! Rational functions in one variable u over Q, stored as primitive
//! integer polynomials.  These carry the zeta and L-series of the census
//! engine; coefficient extraction replaces contour integrals with an
//! exact linear recurrence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer polynomial in u, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZPoly(pub Vec<BigInt>);

impl ZPoly {
    pub fn zero() -> ZPoly {
        ZPoly(Vec::new())
    }
    pub fn one() -> ZPoly {
        ZPoly(vec![BigInt::one()])
    }
    pub fn from_coeffs(mut v: Vec<BigInt>) -> ZPoly {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        ZPoly(v)
    }
    pub fn from_i64(v: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.0.len().max(other.0.len());
        ZPoly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        let n = self.0.len().max(other.0.len());
        ZPoly::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Substitute u -> c*u^k (c = ±1).
    pub fn compose_scaled_power(&self, sign_negative: bool, k: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); (self.0.len() - 1) * k + 1];
        for (i, a) in self.0.iter().enumerate() {
            let mut v = a.clone();
            if sign_negative && i % 2 == 1 {
                v = -v;
            }
            out[i * k] = v;
        }
        ZPoly::from_coeffs(out)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Content (gcd of coefficients), positive.
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = num_integer::Integer::gcd(&g, c);
        }
        if g.is_zero() {
            BigInt::one()
        } else {
            g.abs()
        }
    }
}

/// Exact division over Q assuming divisibility; panics otherwise.
fn qdiv_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut rem: Vec<BigRational> = a.to_vec();
    while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
        rem.pop();
    }
    let db = b.len() - 1;
    assert!(!b.is_empty() && !b[db].is_zero());
    if rem.is_empty() {
        return Vec::new();
    }
    assert!(rem.len() > db || rem.len() == 0);
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let c = rem.last().unwrap() / &b[db];
        let shift = rem.len() - 1 - db;
        quot[shift] = c.clone();
        for (i, bi) in b.iter().enumerate() {
            let v = &rem[shift + i] - &c * bi;
            rem[shift + i] = v;
        }
        while rem.last().map(|x| x.is_zero()).unwrap_or(false) {
            rem.pop();
        }
        if rem.len() <= db {
            break;
        }
    }
    assert!(rem.is_empty(), "inexact polynomial division");
    quot
}

fn qpoly_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    // Euclid over Q, then rescale to a primitive integer polynomial.
    let to_q = |p: &ZPoly| -> Vec<BigRational> {
        p.0.iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    };
    let mut a = to_q(a);
    let mut b = to_q(b);
    let norm = |v: &mut Vec<BigRational>| {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
    };
    norm(&mut a);
    norm(&mut b);
    while !b.is_empty() {
        // a mod b
        let db = b.len() - 1;
        while a.len() > db {
            let c = a.last().unwrap() / &b[db];
            let shift = a.len() - 1 - db;
            for (i, bi) in b.iter().enumerate() {
                let v = &a[shift + i] - &c * bi;
                a[shift + i] = v;
            }
            norm(&mut a);
            if a.len() <= db {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if a.is_empty() {
        return ZPoly::zero();
    }
    // clear denominators, divide by content
    let mut den = BigInt::one();
    for c in &a {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let ints: Vec<BigInt> = a.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let z = ZPoly::from_coeffs(ints);
    let content = z.content();
    ZPoly::from_coeffs(z.0.iter().map(|c| c / &content).collect())
}

/// A reduced rational function num/den with den(0) != 0, normalized so
/// den has positive constant term and the pair is primitive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn {
    num: ZPoly,
    den: ZPoly,
}

impl RationalFn {
    pub fn new(num: ZPoly, den: ZPoly) -> RationalFn {
        assert!(!den.is_zero(), "zero denominator");
        assert!(!den.0[0].is_zero(), "denominator must be a unit at u = 0");
        let mut r = RationalFn { num, den };
        r.reduce();
        r
    }

    pub fn zero() -> RationalFn {
        RationalFn {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> RationalFn {
        RationalFn {
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_poly(p: ZPoly) -> RationalFn {
        RationalFn {
            num: p,
            den: ZPoly::one(),
        }
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }
    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = ZPoly::one();
            return;
        }
        let g = qpoly_gcd(&self.num, &self.den);
        if g.degree().unwrap_or(0) > 0 {
            let to_q = |p: &ZPoly| -> Vec<BigRational> {
                p.0.iter()
                    .map(|c| BigRational::from_integer(c.clone()))
                    .collect()
            };
            let gq = to_q(&g);
            let nq = qdiv_exact(&to_q(&self.num), &gq);
            let dq = qdiv_exact(&to_q(&self.den), &gq);
            let (n, d) = rationals_to_primitive_pair(&nq, &dq);
            self.num = n;
            self.den = d;
        }
        // clear integer content jointly, fix signs via den(0) > 0
        let cn = self.num.content();
        let cd = self.den.content();
        let g = num_integer::Integer::gcd(&cn, &cd);
        if g > BigInt::one() {
            self.num = ZPoly::from_coeffs(self.num.0.iter().map(|c| c / &g).collect());
            self.den = ZPoly::from_coeffs(self.den.0.iter().map(|c| c / &g).collect());
        }
        if self.den.0[0].is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &ZPoly) -> RationalFn {
        RationalFn::new(self.num.mul(p), self.den.clone())
    }

    pub fn div(&self, other: &RationalFn) -> RationalFn {
        assert!(!other.num.is_zero());
        RationalFn::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Substitute u -> u^2.
    pub fn compose_u_squared(&self) -> RationalFn {
        RationalFn::new(
            self.num.compose_scaled_power(false, 2),
            self.den.compose_scaled_power(false, 2),
        )
    }

    /// Substitute u -> -u.
    pub fn compose_minus_u(&self) -> RationalFn {
        RationalFn::new(
            self.num.compose_scaled_power(true, 1),
            self.den.compose_scaled_power(true, 1),
        )
    }

    /// Exact value at a rational point (the denominator must not vanish).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let d = self.den.eval_rational(x);
        assert!(!d.is_zero(), "pole at evaluation point");
        self.num.eval_rational(x) / d
    }

    /// First n+1 power-series coefficients at u = 0, exact, by the linear
    /// recurrence den * series = num.
    pub fn series_coefficients(&self, n: usize) -> Vec<BigRational> {
        let d0 = BigRational::from_integer(self.den.0[0].clone());
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = BigRational::from_integer(self.num.coeff(k));
            for j in 1..=k.min(self.den.0.len().saturating_sub(1)) {
                acc -= BigRational::from_integer(self.den.coeff(j)) * &out[k - j];
            }
            out.push(acc / &d0);
        }
        out
    }
}

fn rationals_to_primitive_pair(n: &[BigRational], d: &[BigRational]) -> (ZPoly, ZPoly) {
    let mut den = BigInt::one();
    for c in n.iter().chain(d.iter()) {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let scale = BigRational::from_integer(den);
    let ni: Vec<BigInt> = n.iter().map(|c| (c * &scale).to_integer()).collect();
    let di: Vec<BigInt> = d.iter().map(|c| (c * &scale).to_integer()).collect();
    (ZPoly::from_coeffs(ni), ZPoly::from_coeffs(di))
}
