//! Exact coefficient arithmetic: the rationals and prime fields F_p.
//!
//! Every computation in the engine routes through a [`FieldSpec`], which owns
//! the arithmetic, and [`Scalar`], which is a tagless element (an `Fp` scalar
//! does not carry its modulus; the surrounding matrix or algebra does).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Default prime for the prime-field option.
pub const DEFAULT_PRIME: u64 = 32003;

/// The coefficient field: exact rationals or a prime field with p < 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, x: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(x))),
            FieldSpec::Prime(p) => {
                let r = x.rem_euclid(*p as i64) as u64;
                Scalar::Fp(r)
            }
        }
    }

    /// Parse `n` or `n/d` into a canonical scalar.
    pub fn from_fraction(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Other("zero denominator".into()));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::Prime(_) => {
                let n = self.from_i64(num);
                let d = self.from_i64(den);
                let inv = self
                    .inv(&d)
                    .ok_or_else(|| Error::Other(format!("{den} is 0 mod p")))?;
                Ok(self.mul(&n, &inv))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x * y) % p),
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    /// Multiplicative inverse; `None` on zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(x.recip()))
                }
            }
            (FieldSpec::Prime(p), Scalar::Fp(x)) => {
                if *x == 0 {
                    None
                } else {
                    Some(Scalar::Fp(pow_mod(*x, p - 2, *p)))
                }
            }
            _ => panic!("scalar/field kind mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn render(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(x) => x.to_string(),
        }
    }

    /// `true` when the scalar renders without a sign, used for pretty-printing
    /// linear combinations.
    pub fn is_display_negative(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Fp(_) => false,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// A field element in canonical form (lowest terms over Q, least residue in F_p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Fp(u64),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(32003).is_ok());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(32004).is_err());
        assert!(FieldSpec::prime(1 << 31).is_err());
    }

    #[test]
    fn rational_arithmetic_reduces() {
        let q = FieldSpec::Rationals;
        let half = q.from_fraction(1, 2).unwrap();
        let two = q.from_i64(2);
        assert_eq!(q.mul(&half, &two), q.one());
        assert_eq!(q.render(&q.from_fraction(2, 4).unwrap()), "1/2");
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let a = f.from_i64(-3);
        assert_eq!(a, Scalar::Fp(4));
        let inv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &inv), f.one());
        assert!(f.inv(&f.zero()).is_none());
    }
}
