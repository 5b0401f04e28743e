//! Exact coefficient fields: prime fields `F_p` and the rationals.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = 32003;

/// A field context. Elements are plain values; all arithmetic goes through the
/// context so that the modulus of `F_p` is chosen at run time.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn embed_int(&self, v: i64) -> Self::Elem;
    /// Image of the rational number `num/den`.
    fn embed_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn format(&self, a: &Self::Elem) -> String;
    /// `true` if the element prints with a leading minus sign.
    fn is_negative_display(&self, a: &Self::Elem) -> bool;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `F_p` with `p < 2^32`, elements stored as canonical residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn embed_int(&self, v: i64) -> u64 {
        self.reduce(v)
    }
    fn embed_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let p = BigInt::from(self.p);
        let n = ((num % &p) + &p) % &p;
        let d = ((den % &p) + &p) % &p;
        let d = d.to_u64().unwrap_or(0);
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(n.to_u64().unwrap_or(0) * self.inv(&d)? % self.p)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(*a, self.p - 2))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    /// Prints the symmetric representative so that `-1` reads as `-1`.
    fn format(&self, a: &u64) -> String {
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn is_negative_display(&self, a: &u64) -> bool {
        *a > self.p / 2
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn embed_int(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn embed_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn is_negative_display(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

/// Field choice made at run time, e.g. from a `--field p|Q` flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Prime(u64),
    Rational,
}

impl FieldChoice {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" | "q" => Ok(FieldChoice::Rational),
            other => {
                let p: u64 = other.parse().map_err(|_| Error::Parse(format!("field `{other}`")))?;
                PrimeField::new(p)?;
                Ok(FieldChoice::Prime(p))
            }
        }
    }
}

impl Display for FieldChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldChoice::Prime(p) => write!(f, "{p}"),
            FieldChoice::Rational => write!(f, "Q"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::default();
        let a = f.embed_int(-1);
        assert_eq!(a, 32002);
        assert_eq!(f.format(&a), "-1");
        assert_eq!(f.mul(&a, &a), 1);
        let inv3 = f.inv(&3).unwrap();
        assert_eq!(f.mul(&inv3, &3), 1);
        assert_eq!(f.inv(&0), Err(Error::DivisionByZero));
        let half = f.embed_ratio(&1.into(), &2.into()).unwrap();
        assert_eq!(f.mul(&half, &2), 1);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(PrimeField::new(32004), Err(Error::NotPrime(32004)));
        assert!(FieldChoice::parse("6").is_err());
        assert_eq!(FieldChoice::parse("Q").unwrap(), FieldChoice::Rational);
        assert_eq!(FieldChoice::parse("7").unwrap(), FieldChoice::Prime(7));
    }

    #[test]
    fn rationals() {
        let q = Rationals;
        let a = q.embed_ratio(&3.into(), &4.into()).unwrap();
        assert_eq!(q.format(&q.mul(&a, &q.embed_int(4))), "3");
        assert!(q.embed_ratio(&1.into(), &0.into()).is_err());
    }
}
