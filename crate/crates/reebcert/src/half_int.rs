//! Exact half-integer arithmetic.
//!
//! Robbin-Salamon indices are sums of halves of signatures, so they live in
//! (1/2)Z. Storing the doubled value keeps every index computation exact;
//! no floating-point index is ever emitted.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element of (1/2)Z, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };

    /// Build from the doubled value, i.e. `from_doubled(3)` is 3/2.
    pub fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    /// Build from a plain integer.
    pub fn from_int(value: i64) -> Self {
        HalfInt { doubled: 2 * value }
    }

    /// Half the signature of a quadratic form with the given signature.
    pub fn half_of(signature: i64) -> Self {
        HalfInt { doubled: signature }
    }

    pub fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The integer value, if this half-integer is an integer.
    pub fn as_int(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }

    pub fn to_f64(self) -> f64 {
        self.doubled as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled + rhs.doubled }
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.doubled += rhs.doubled;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled - rhs.doubled }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { doubled: -self.doubled }
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt { doubled: self.doubled * rhs }
    }
}

impl Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, |a, b| a + b)
    }
}

impl From<i64> for HalfInt {
    fn from(value: i64) -> Self {
        HalfInt::from_int(value)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = HalfInt::from_doubled(3); // 3/2
        let b = HalfInt::from_int(-2);
        assert_eq!(a + b, HalfInt::from_doubled(-1));
        assert_eq!(-(a + b), HalfInt::from_doubled(1));
        assert_eq!(a - b, HalfInt::from_doubled(7));
        assert_eq!(a * 2, HalfInt::from_int(3));
    }

    #[test]
    fn renders_integers_and_halves() {
        assert_eq!(HalfInt::from_int(3).to_string(), "3");
        assert_eq!(HalfInt::from_doubled(-5).to_string(), "-5/2");
        assert_eq!(HalfInt::from_doubled(1).to_string(), "1/2");
        assert_eq!(HalfInt::ZERO.to_string(), "0");
    }

    #[test]
    fn integer_round_trip() {
        assert_eq!(HalfInt::from_int(7).as_int(), Some(7));
        assert_eq!(HalfInt::from_doubled(7).as_int(), None);
        assert_eq!(HalfInt::from_doubled(7).to_f64(), 3.5);
    }
}
