//! Divisor classes on Hirzebruch surfaces `F_e`.
//!
//! Classes are stored as `a s_inf + b l`, where `s_inf` is the negative section
//! (`s_inf^2 = -e`) and `l` is a fibre. The tautological section
//! `s_0 = s_inf + e l` has `s_0^2 = e`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hirzebruch {
    e: i64,
}

impl Hirzebruch {
    pub fn new(e: i64) -> Result<Self> {
        if e < 0 {
            return Err(Error::NegativeHirzebruch(e));
        }
        Ok(Self { e })
    }

    pub fn e(self) -> i64 {
        self.e
    }

    pub fn negative_section(self) -> RuledClass {
        RuledClass::new(1, 0)
    }

    pub fn fibre(self) -> RuledClass {
        RuledClass::new(0, 1)
    }

    pub fn tautological_section(self) -> RuledClass {
        self.from_tautological(1, 0)
    }

    pub fn intersect(self, c1: RuledClass, c2: RuledClass) -> i64 {
        -self.e * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b
    }

    /// `K = -2 s_inf - (e + 2) l`.
    pub fn canonical(self) -> RuledClass {
        RuledClass::new(-2, -(self.e + 2))
    }

    /// Nef and base-point-free coincide on `F_e`: nonnegative against both
    /// `l` and `s_inf`.
    pub fn is_nef(self, cls: RuledClass) -> bool {
        self.intersect(cls, self.fibre()) >= 0 && self.intersect(cls, self.negative_section()) >= 0
    }

    /// Converts `a s_0 + b l` into the `(s_inf, l)` basis.
    pub fn from_tautological(self, a: i64, b: i64) -> RuledClass {
        RuledClass::new(a, b + self.e * a)
    }

    /// Inverse of [`Hirzebruch::from_tautological`].
    pub fn to_tautological(self, cls: RuledClass) -> (i64, i64) {
        (cls.a, cls.b - self.e * cls.a)
    }
}

impl fmt::Display for Hirzebruch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.e)
    }
}

/// `a s_inf + b l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RuledClass {
    pub a: i64,
    pub b: i64,
}

impl RuledClass {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// The effective cone of `F_e` is spanned by `s_inf` and `l` for every `e`.
    pub fn is_effective(self) -> bool {
        self.a >= 0 && self.b >= 0
    }
}

impl Add for RuledClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for RuledClass {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for RuledClass {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul<RuledClass> for i64 {
    type Output = RuledClass;
    fn mul(self, rhs: RuledClass) -> RuledClass {
        RuledClass::new(self * rhs.a, self * rhs.b)
    }
}

impl fmt::Display for RuledClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}s + {}l", self.a, self.b)
    }
}
