//! Coefficient traits shared by the polynomial and series layers.
//!
//! Everything here is exact. Machine integers (`i64`, `i128`) are accepted
//! for quick small-degree work; the verification code runs on [`BigInt`]
//! and [`BigRational`].

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact commutative ring element usable as a polynomial coefficient.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Embeds an integer. Panics if the value does not fit the target type.
    fn from_bigint(value: &BigInt) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_bigint(&BigInt::from(value))
    }
}

/// A [`Scalar`] with exact division by nonzero elements.
pub trait FieldScalar: Scalar + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {}

impl Scalar for BigInt {
    fn from_bigint(value: &BigInt) -> Self {
        value.clone()
    }
}

impl Scalar for BigRational {
    fn from_bigint(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }
}

impl FieldScalar for BigRational {}

macro_rules! machine_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_bigint(value: &BigInt) -> Self {
                <$t>::try_from(value).expect("integer does not fit the machine scalar")
            }

            fn from_i64(value: i64) -> Self {
                <$t>::try_from(value).expect("integer does not fit the machine scalar")
            }
        }
    )*};
}

machine_scalar!(i64, i128);

/// Converts an integer-valued rational back to an integer, if it is one.
pub fn rational_to_integer(value: &BigRational) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

/// Sign of a signed scalar as -1, 0 or 1.
pub fn sign_of<T: Signed>(value: &T) -> i8 {
    if value.is_zero() {
        0
    } else if value.is_positive() {
        1
    } else {
        -1
    }
}
