use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Coefficient field of a polynomial ring. Elements carry no context, so
/// every operation goes through the field value.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Whether the canonical printed form carries a minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool;
    /// Canonical text of `|a|` (the residue itself for prime fields).
    fn format_abs(&self, a: &Self::Elem) -> String;
    fn characteristic(&self) -> u64;
    /// Uniform element for prime fields; small integers for the rationals.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

pub const DEFAULT_MODULUS: u64 = 32003;

/// `Z/qZ` for a prime `q < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
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

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if q >= 1 << 32 || !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { q: DEFAULT_MODULUS }
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
    fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.q)).to_u64().expect("residue fits")
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.q
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.q - b) % self.q
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.q
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.q - a) % self.q
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat
        let mut base = *a;
        let mut exp = self.q - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.q;
            }
            base = base * base % self.q;
            exp >>= 1;
        }
        acc
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_negative(&self, _a: &u64) -> bool {
        false
    }
    fn format_abs(&self, a: &u64) -> String {
        a.to_string()
    }
    fn characteristic(&self) -> u64 {
        self.q
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.q)
    }
}

/// The field of rational numbers, exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
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
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn format_abs(&self, a: &BigRational) -> String {
        a.abs().to_string()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        BigRational::from_integer(BigInt::from(rng.gen_range(-9i64..=9)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.neg(&3), 4);
        assert_eq!(f.neg(&0), 0);
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.from_i64(15), 1);
        let big = PrimeField::default();
        assert_eq!(big.mul(&big.inv(&12345), &12345), 1);
    }

    #[test]
    fn primality_guard() {
        assert!(PrimeField::new(32003).is_ok());
        assert_eq!(PrimeField::new(32004), Err(Error::NotPrime(32004)));
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(4294967311).is_err());
    }

    #[test]
    fn rational_formatting() {
        let q = Rationals;
        let x = BigRational::new((-3).into(), 2.into());
        assert!(q.is_negative(&x));
        assert_eq!(q.format_abs(&x), "3/2");
    }
}
