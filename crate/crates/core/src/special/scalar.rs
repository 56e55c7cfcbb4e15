//! Exact coefficient fields for binary forms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly;

/// An exact field. `gcd_degree` is the degree of `gcd(a, b)` for dense
/// ascending coefficient vectors.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    /// `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn gcd_degree(a: &[Self], b: &[Self]) -> Option<usize> {
        poly::degree(&poly::gcd_euclid(a, b))
    }
}

/// Modulus of [`Fp`]: the Mersenne prime `2^31 - 1`.
pub const PRIME: u64 = (1 << 31) - 1;

/// Element of the prime field `Z / (2^31 - 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Self(v % PRIME)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self((self.0 + rhs.0) % PRIME)
    }
}

impl Sub for Fp {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self((self.0 + PRIME - rhs.0) % PRIME)
    }
}

impl Mul for Fp {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0 % PRIME)
    }
}

impl Neg for Fp {
    type Output = Self;
    fn neg(self) -> Self {
        Self((PRIME - self.0) % PRIME)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Self(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Self(1)
    }
}

impl Scalar for Fp {
    fn from_i64(v: i64) -> Self {
        Self(v.rem_euclid(PRIME as i64) as u64)
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.pow(PRIME - 2))
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    /// Clears denominators and runs the subresultant remainder sequence over
    /// the integers, which keeps coefficient growth polynomial.
    fn gcd_degree(a: &[Self], b: &[Self]) -> Option<usize> {
        let a = poly::clear_denominators(a);
        let b = poly::clear_denominators(b);
        poly::degree(&poly::subresultant_gcd(&a, &b))
    }
}
