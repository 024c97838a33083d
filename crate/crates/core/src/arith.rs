//! Checked `u128` helpers. Every counting routine goes through these so that an
//! overflow surfaces as [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};
use crate::Count;

#[inline]
pub(crate) fn add(a: Count, b: Count, what: &'static str) -> Result<Count> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

#[inline]
pub(crate) fn sub(a: Count, b: Count, what: &'static str) -> Result<Count> {
    a.checked_sub(b).ok_or(Error::Overflow(what))
}

#[inline]
pub(crate) fn mul(a: Count, b: Count, what: &'static str) -> Result<Count> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

#[inline]
pub(crate) fn pow2(k: u32, what: &'static str) -> Result<Count> {
    1u128
        .checked_shl(k)
        .filter(|_| k < 128)
        .ok_or(Error::Overflow(what))
}

/// Exact division by 5, reporting the remainder as a mismatch.
pub(crate) fn div5_exact(value: i128, what: &'static str) -> Result<i128> {
    if value % 5 != 0 {
        return Err(crate::error::mismatch(
            what,
            format!("{value} is not divisible by 5"),
        ));
    }
    Ok(value / 5)
}

pub(crate) fn to_signed(v: Count, what: &'static str) -> Result<i128> {
    i128::try_from(v).map_err(|_| Error::Overflow(what))
}

pub(crate) fn to_unsigned(v: i128, what: &'static str) -> Result<Count> {
    Count::try_from(v).map_err(|_| Error::Overflow(what))
}
