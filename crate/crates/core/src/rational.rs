//! Exact rational scalars.
//!
//! Every measure value, weight, level and integral in this crate is a [`Rat`]:
//! an arbitrary-precision fraction kept reduced with a positive denominator.
//! There is no floating point anywhere in the library; equality of optima and
//! certificate checks are exact comparisons of fractions.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// An exact rational number. Wraps a big-integer fraction that is always
/// reduced and has a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

/// Error produced when parsing a `"p/q"` string.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRatError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer in rational literal {0:?}")]
    BadInteger(String),
    #[error("denominator must be positive in {0:?}")]
    NonPositiveDenominator(String),
}

impl Rat {
    /// Builds `numer/denom`. Panics if `denom == 0`; intended for literals in
    /// code and tests. Use [`Rat::parse`] for untrusted input.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(value: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// True when `0 <= self <= 1`.
    pub fn in_unit_interval(&self) -> bool {
        !self.is_negative() && *self <= Rat::one()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Parses `"p"` or `"p/q"` with `q > 0`. The numerator may be negative.
    pub fn parse(s: &str) -> Result<Self, ParseRatError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRatError::Empty);
        }
        let (numer_str, denom_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let numer: BigInt = numer_str
            .parse()
            .map_err(|_| ParseRatError::BadInteger(s.to_owned()))?;
        let denom: BigInt = match denom_str {
            Some(d) => d
                .parse()
                .map_err(|_| ParseRatError::BadInteger(s.to_owned()))?,
            None => BigInt::one(),
        };
        if !denom.is_positive() {
            return Err(ParseRatError::NonPositiveDenominator(s.to_owned()));
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    /// Renders the reduced fraction as `"p/q"`, or `"p"` when the denominator
    /// is one. `parse(render(q)) == q` for every `q`.
    pub fn render(&self) -> String {
        if self.0.denom().is_one() {
            self.0.numer().to_string()
        } else {
            format!("{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rat::parse(s)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rat::parse(&s).map_err(de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }

        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }

        impl $assign_trait for Rat {
            fn $assign_method(&mut self, rhs: Rat) {
                (self.0).$assign_method(rhs.0);
            }
        }

        impl<'a> $assign_trait<&'a Rat> for Rat {
            fn $assign_method(&mut self, rhs: &'a Rat) {
                (self.0).$assign_method(&rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0.div(rhs.0))
    }
}

impl<'a, 'b> Div<&'b Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &'b Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat((&self.0).div(&rhs.0))
    }
}

impl DivAssign for Rat {
    fn div_assign(&mut self, rhs: Rat) {
        assert!(!rhs.is_zero(), "division by zero");
        self.0.div_assign(rhs.0);
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(self.0.neg())
    }
}

impl<'a> Neg for &'a Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat((&self.0).neg())
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for Rat {
    fn from(value: i64) -> Self {
        Rat::from_int(value)
    }
}

/// Shorthand used throughout the tests: `rat(2, 3)` is `2/3`.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(numer, denom)
}
