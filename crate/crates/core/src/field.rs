//! Exact coefficient fields.
//!
//! Everything downstream is generic over [`Field`]; the default instantiation
//! is [`Rational`] (arbitrary precision). [`ModP`] trades generality for speed
//! when only identities defined over the integers are being checked.

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// An exact field. No operation may round.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    /// `num / den`; `None` when `den` vanishes in the field.
    fn from_ratio(num: i64, den: i64) -> Option<Self>;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Numerator and denominator in lowest terms, when both fit in an `i64`.
    fn to_ratio(&self) -> Option<(i64, i64)>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.mul(&inv))
    }
}

/// Exact rationals with arbitrary precision; canonical form is reduced with a
/// positive denominator (guaranteed by `num-rational`).
pub type Rational = BigRational;

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn to_ratio(&self) -> Option<(i64, i64)> {
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// The prime field `F_P`. `P` must be a prime; `P >= 5` is what the checks in
/// this crate assume.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModP<const P: u64>(u64);

impl<const P: u64> ModP<P> {
    pub fn new(v: i64) -> Self {
        ModP(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u128;
        let mut acc = 1u128;
        let p = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        ModP(acc as u64)
    }
}

impl<const P: u64> fmt::Debug for ModP<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for ModP<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Print the symmetric representative, it reads better for small signed values.
        if self.0 > P / 2 {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u64> Field for ModP<P> {
    fn zero() -> Self {
        ModP(0)
    }

    fn one() -> Self {
        ModP(1 % P)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn from_i64(v: i64) -> Self {
        ModP::new(v)
    }

    fn from_ratio(num: i64, den: i64) -> Option<Self> {
        ModP::<P>::new(num).div(&ModP::new(den))
    }

    fn add(&self, other: &Self) -> Self {
        ModP(((self.0 as u128 + other.0 as u128) % P as u128) as u64)
    }

    fn sub(&self, other: &Self) -> Self {
        ModP(((self.0 as u128 + P as u128 - other.0 as u128) % P as u128) as u64)
    }

    fn mul(&self, other: &Self) -> Self {
        ModP(((self.0 as u128 * other.0 as u128) % P as u128) as u64)
    }

    fn neg(&self) -> Self {
        ModP((P - self.0) % P)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn to_ratio(&self) -> Option<(i64, i64)> {
        let v = if self.0 > P / 2 {
            -((P - self.0) as i64)
        } else {
            self.0 as i64
        };
        Some((v, 1))
    }
}
