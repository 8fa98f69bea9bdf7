//! Coefficient rings with exact arithmetic: the integers, the integers modulo
//! m with canonical residues in `[0, m)`, and the rationals with reduced
//! fractions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The coefficient ring every algebra, matrix, and tower in this crate is
/// defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "modulus")]
pub enum CoefficientRing {
    Integers,
    IntegersMod(u64),
    Rationals,
}

/// An exact scalar. Integer-backed variants are kept in canonical form by the
/// ring operations: residues mod m live in `[0, m)`, rationals are reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
}

impl Scalar {
    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Scalar::Int(n) => Some(n),
            Scalar::Rat(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_zero(),
            Scalar::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_one(),
            Scalar::Rat(q) => q.is_one(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{n}"),
            Scalar::Rat(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

impl CoefficientRing {
    pub fn zero(&self) -> Scalar {
        self.from_bigint(BigInt::zero())
    }

    pub fn one(&self) -> Scalar {
        self.from_bigint(BigInt::one())
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(&self, n: BigInt) -> Scalar {
        match self {
            CoefficientRing::Integers => Scalar::Int(n),
            CoefficientRing::IntegersMod(m) => {
                let m = BigInt::from(*m);
                let mut r = n % &m;
                if r.is_negative() {
                    r += &m;
                }
                Scalar::Int(r)
            }
            CoefficientRing::Rationals => Scalar::Rat(BigRational::from_integer(n)),
        }
    }

    /// Re-canonicalize a scalar that may have been produced elsewhere.
    pub fn normalize(&self, s: &Scalar) -> Scalar {
        match s {
            Scalar::Int(n) => self.from_bigint(n.clone()),
            Scalar::Rat(q) => match self {
                CoefficientRing::Rationals => Scalar::Rat(q.clone()),
                _ => {
                    assert!(q.is_integer(), "non-integral scalar in integral ring");
                    self.from_bigint(q.to_integer())
                }
            },
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => self.from_bigint(x + y),
            _ => Scalar::Rat(self.to_rat(a) + self.to_rat(b)),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => self.from_bigint(x - y),
            _ => Scalar::Rat(self.to_rat(a) - self.to_rat(b)),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => self.from_bigint(x * y),
            _ => Scalar::Rat(self.to_rat(a) * self.to_rat(b)),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Int(x) => self.from_bigint(-x),
            Scalar::Rat(q) => Scalar::Rat(-q),
        }
    }

    pub fn mul_i64(&self, a: &Scalar, n: i64) -> Scalar {
        self.mul(a, &self.from_i64(n))
    }

    /// Multiplicative inverse where one exists: everywhere over Q, at units
    /// mod m, and at +-1 over Z.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match self {
            CoefficientRing::Rationals => {
                let q = self.to_rat(a);
                if q.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(q.recip()))
                }
            }
            CoefficientRing::Integers => {
                let n = a.as_int()?;
                if n.is_one() || (-n).is_one() {
                    Some(Scalar::Int(n.clone()))
                } else {
                    None
                }
            }
            CoefficientRing::IntegersMod(m) => {
                let n = a.as_int()?;
                let m = BigInt::from(*m);
                let (g, x, _) = extended_gcd(n, &m);
                if g.is_one() {
                    Some(self.from_bigint(x))
                } else {
                    None
                }
            }
        }
    }

    /// Exact division, defined only when the quotient lies in the ring.
    pub fn div_exact(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        match self {
            CoefficientRing::Rationals => Some(self.mul(a, &self.inv(b)?)),
            CoefficientRing::IntegersMod(_) => Some(self.mul(a, &self.inv(b)?)),
            CoefficientRing::Integers => {
                let (x, y) = (a.as_int()?, b.as_int()?);
                if y.is_zero() {
                    return None;
                }
                let (q, r) = num_integer::Integer::div_rem(x, y);
                if r.is_zero() {
                    Some(Scalar::Int(q))
                } else {
                    None
                }
            }
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            CoefficientRing::Rationals => true,
            CoefficientRing::IntegersMod(m) => is_prime_u64(*m),
            CoefficientRing::Integers => false,
        }
    }

    fn to_rat(&self, a: &Scalar) -> BigRational {
        match a {
            Scalar::Int(n) => BigRational::from_integer(n.clone()),
            Scalar::Rat(q) => q.clone(),
        }
    }
}

/// `(g, x, y)` with `g = gcd(a, b)` and `ax + by = g`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// binom(a, n) for integer a (possibly negative), n >= 0.
pub fn binomial(a: i64, n: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= BigInt::from(a) - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// n! as a BigInt.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_residues() {
        let r = CoefficientRing::IntegersMod(7);
        assert_eq!(r.from_i64(-3), r.from_i64(4));
        assert_eq!(r.add(&r.from_i64(5), &r.from_i64(4)), r.from_i64(2));
    }

    #[test]
    fn inverses() {
        let q = CoefficientRing::Rationals;
        let half = q.inv(&q.from_i64(2)).unwrap();
        assert_eq!(q.mul(&half, &q.from_i64(2)), q.one());

        let z6 = CoefficientRing::IntegersMod(6);
        assert!(z6.inv(&z6.from_i64(2)).is_none());
        assert_eq!(z6.inv(&z6.from_i64(5)).unwrap(), z6.from_i64(5));
        assert!(!z6.is_field());
        assert!(CoefficientRing::IntegersMod(5).is_field());
    }

    #[test]
    fn binomial_negative_upper() {
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(2, 5), BigInt::zero());
    }
}
