//! Scalar bound shared by the exact-arithmetic routines.
//!
//! Everything that touches matrix entries, polynomial coefficients or
//! interpolation runs over a signed exact integer type. `i64` is the default
//! everywhere (see the aliases at the crate root); `i128` and
//! `num_bigint::BigInt` satisfy the same bound.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

/// Signed exact integer with checked arithmetic.
pub trait ExactInt:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}

pub(crate) fn from_i64<T: ExactInt>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent a small integer")
}

pub(crate) fn checked_mul<T: ExactInt>(a: &T, b: &T) -> T {
    a.checked_mul(b).expect("exact arithmetic overflow")
}

pub(crate) fn checked_sub<T: ExactInt>(a: &T, b: &T) -> T {
    a.checked_sub(b).expect("exact arithmetic overflow")
}

pub(crate) fn checked_add<T: ExactInt>(a: &T, b: &T) -> T {
    a.checked_add(b).expect("exact arithmetic overflow")
}
