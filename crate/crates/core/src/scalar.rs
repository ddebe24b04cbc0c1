//! Scalar traits shared by the polynomial, series and linear-algebra layers.
//!
//! Everything in this crate is exact. Coefficient rings only need ring
//! operations; rank and membership computations need a field in which zero
//! tests are decisive, so floating point types deliberately do not implement
//! [`ExactField`].

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// A commutative ring used for polynomial and series coefficients.
pub trait Coeff: Num + Clone + PartialEq + Debug + Neg<Output = Self> {
    fn from_i64(v: i64) -> Self;
}

macro_rules! int_coeff {
    ($($t:ty),*) => {$(
        impl Coeff for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }
    )*};
}

int_coeff!(i32, i64, i128);

impl Coeff for num_bigint::BigInt {
    fn from_i64(v: i64) -> Self {
        v.into()
    }
}

impl<T> Coeff for Ratio<T>
where
    T: Integer + Clone + Debug + Neg<Output = T> + From<i64>,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from(v))
    }
}

/// An ordered field with exact arithmetic.
pub trait ExactField: Coeff + Signed + PartialOrd {}

impl<T> ExactField for Ratio<T> where T: Integer + Signed + Clone + Debug + From<i64> {}

/// An integer type usable by fraction-free elimination.
pub trait ExactInt: Integer + Signed + Clone + Debug {}

impl<T: Integer + Signed + Clone + Debug> ExactInt for T {}
