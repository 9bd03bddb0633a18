//! Scalar traits the generic containers are parameterised over.
//!
//! Exchange matrices only need an exact signed integer ring; polynomial and
//! rational-function arithmetic needs an exact field so that gcd reduction is
//! meaningful. Floating point types are deliberately not implemented.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Signed};

/// Exact signed integers usable as exchange-matrix entries.
pub trait IntScalar:
    Clone + Ord + Signed + Integer + FromPrimitive + Debug + Display + Send + Sync
{
}

impl<T> IntScalar for T where
    T: Clone + Ord + Signed + Integer + FromPrimitive + Debug + Display + Send + Sync
{
}

/// Exact fields usable as polynomial coefficients.
pub trait FieldScalar: Clone + PartialEq + Signed + Debug + Display + Send + Sync {
    fn from_int(v: i64) -> Self;

    /// Numerator and denominator as arbitrary-precision integers.
    fn to_big_ratio(&self) -> BigRational;
}

impl FieldScalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_big_ratio(&self) -> BigRational {
        self.clone()
    }
}

impl FieldScalar for Ratio<i64> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn to_big_ratio(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

impl FieldScalar for Ratio<i128> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }

    fn to_big_ratio(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

/// Convert between integer scalars through `BigInt`.
pub fn to_bigint<T: IntScalar>(v: &T) -> BigInt {
    // Display round-trip keeps the trait surface small; entries are tiny.
    v.to_string().parse().expect("integer display is parseable")
}

pub fn from_bigint<T: IntScalar>(v: &BigInt) -> Option<T> {
    T::from_str_radix(&v.to_string(), 10).ok()
}
