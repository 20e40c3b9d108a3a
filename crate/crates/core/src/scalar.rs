//! Coefficient types for exact dimension counting.
//!
//! Every count in this crate is a dimension over a field, so coefficients are
//! unsigned integers. Arithmetic always goes through the checked operations:
//! fixed-width types report overflow instead of wrapping, and arbitrary
//! precision types never fail.

use std::fmt::{Debug, Display};

use num_bigint::BigUint;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive, Unsigned};

use crate::error::{Error, Result};

/// An exact unsigned integer usable as a Betti-number coefficient.
pub trait Coefficient:
    Unsigned
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + FromPrimitive
    + ToPrimitive
    + Clone
    + Ord
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    fn from_count(n: u64) -> Self {
        // Every unsigned coefficient type we support holds u64.
        Self::from_u64(n).expect("coefficient type cannot represent a u64 count")
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        self.checked_add(other).ok_or(Error::Overflow)
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other).ok_or(Error::Overflow)
    }

    /// `self - other`, or `None` when the difference would be negative.
    fn try_sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(other)
    }
}

impl Coefficient for u64 {}
impl Coefficient for u128 {}
impl Coefficient for BigUint {}
