//! Binary strings, the Fibonacci/Lucas string classes and their counts.
//!
//! Positions are 1-indexed from the left: for `x = x1 x2 ... xn`, `x1` is the
//! most significant bit of the numeric encoding. This keeps the position
//! arithmetic in the imbalance tables a direct transliteration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::Count;

/// Default bound on `n` for anything that materializes `2^n` or `F(n+2)` strings.
pub const DEFAULT_CAP: u32 = 26;

/// Environment variable that overrides [`DEFAULT_CAP`] in the CLI.
pub const CAP_ENV: &str = "FIBCUBE_CAP";

/// A vertex of `Q_n`: a fixed-length binary string of at most 64 bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    // Ordering compares `len` first, then the numeric value. Within one
    // length that is ascending numeric order with position 1 most significant.
    len: u32,
    bits: u64,
}

impl BitString {
    pub const MAX_LEN: u32 = 64;

    pub fn new(bits: u64, len: u32) -> Result<Self> {
        if len > Self::MAX_LEN {
            return Err(Error::LengthTooLarge {
                len,
                max: Self::MAX_LEN,
            });
        }
        if len < 64 && bits >> len != 0 {
            return Err(Error::Parse(format!(
                "value {bits:#b} does not fit in {len} bits"
            )));
        }
        Ok(Self { len, bits })
    }

    /// Caller guarantees `bits < 2^len` and `len <= 64`.
    #[inline]
    pub(crate) fn from_raw(bits: u64, len: u32) -> Self {
        debug_assert!(len <= 64 && (len == 64 || bits >> len == 0));
        Self { len, bits }
    }

    /// The empty string.
    pub const fn empty() -> Self {
        Self { len: 0, bits: 0 }
    }

    pub fn zeros(len: u32) -> Result<Self> {
        Self::new(0, len)
    }

    pub fn ones(len: u32) -> Result<Self> {
        Self::new(mask(len), len)
    }

    /// Parse a string of `'0'`/`'1'` characters whose length must equal `len`.
    /// This is the only way to parse the empty string.
    pub fn parse_exact(s: &str, len: u32) -> Result<Self> {
        if s.len() != len as usize {
            return Err(Error::Parse(format!(
                "{s:?} has length {}, expected {len}",
                s.len()
            )));
        }
        if len == 0 {
            return Ok(Self::empty());
        }
        s.parse()
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Numeric value, position 1 most significant.
    #[inline]
    pub fn value(&self) -> u64 {
        self.bits
    }

    #[inline]
    fn shift(&self, i: u32) -> u32 {
        assert!(
            (1..=self.len).contains(&i),
            "position {i} out of range 1..={}",
            self.len
        );
        self.len - i
    }

    /// Bit at 1-indexed position `i`. Panics when `i` is out of range.
    #[inline]
    pub fn bit(&self, i: u32) -> bool {
        (self.bits >> self.shift(i)) & 1 == 1
    }

    /// `self + δ_i`: flip position `i`.
    #[inline]
    pub fn flip(&self, i: u32) -> Self {
        Self::from_raw(self.bits ^ (1u64 << self.shift(i)), self.len)
    }

    pub fn with_bit(&self, i: u32, value: bool) -> Self {
        if self.bit(i) == value {
            *self
        } else {
            self.flip(i)
        }
    }

    /// Bitwise complement.
    pub fn complement(&self) -> Self {
        Self::from_raw(!self.bits & mask(self.len), self.len)
    }

    /// Exchange positions `i` and `j`.
    pub fn swap(&self, i: u32, j: u32) -> Self {
        let (a, b) = (self.bit(i), self.bit(j));
        self.with_bit(i, b).with_bit(j, a)
    }

    /// `x_k x_{k+1} ... x_n x_1 ... x_{k-1}`: the string read cyclically from
    /// position `k`. `rotate(1)` is the identity.
    pub fn rotate(&self, k: u32) -> Self {
        if self.len == 0 {
            return *self;
        }
        let _ = self.shift(k);
        let r = k - 1;
        if r == 0 {
            return *self;
        }
        let n = self.len;
        let rotated = ((self.bits << r) | (self.bits >> (n - r))) & mask(n);
        Self::from_raw(rotated, n)
    }

    /// Delete position `i`, giving a string of length `n - 1`.
    pub fn remove(&self, i: u32) -> Self {
        let s = self.shift(i);
        let low = self.bits & mask(s);
        let high = self.bits.checked_shr(s + 1).unwrap_or(0);
        Self::from_raw((high << s) | low, self.len - 1)
    }

    /// Insert `value` so that it lands at position `i` (`1 <= i <= n + 1`).
    pub fn insert(&self, i: u32, value: bool) -> Result<Self> {
        if i == 0 || i > self.len + 1 {
            return Err(Error::DirectionOutOfRange {
                direction: i,
                n: self.len + 1,
            });
        }
        if self.len == Self::MAX_LEN {
            return Err(Error::LengthTooLarge {
                len: self.len + 1,
                max: Self::MAX_LEN,
            });
        }
        let s = self.len + 1 - i;
        let low = self.bits & mask(s);
        let high = self.bits >> s;
        let bits = high.checked_shl(s + 1).unwrap_or(0) | ((value as u64) << s) | low;
        Ok(Self::from_raw(bits, self.len + 1))
    }

    /// Positions `from..=to` as a new string; empty when `from > to`.
    pub fn substring(&self, from: u32, to: u32) -> Self {
        if from > to {
            return Self::empty();
        }
        let _ = self.shift(from);
        let s_to = self.shift(to);
        let len = to - from + 1;
        Self::from_raw((self.bits >> s_to) & mask(len), len)
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        let len = self.len + other.len;
        if len > Self::MAX_LEN {
            return Err(Error::LengthTooLarge {
                len,
                max: Self::MAX_LEN,
            });
        }
        let high = if other.len == 64 {
            0
        } else {
            self.bits << other.len
        };
        Ok(Self::from_raw(high | other.bits, len))
    }

    pub fn count_ones(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn count_zeros(&self) -> u32 {
        self.len - self.count_ones()
    }

    /// True when some `x_i x_{i+1} = 11`.
    #[inline]
    pub fn has_adjacent_ones(&self) -> bool {
        self.bits & (self.bits >> 1) != 0
    }
}

#[inline]
pub(crate) fn mask(len: u32) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len == 0 {
            f.write_str("ε")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for BitString {
    type Err = Error;

    /// Parses a non-empty `0`/`1` string. Use [`BitString::parse_exact`] for ε.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Parse(
                "empty string needs an explicit length-0 context".into(),
            ));
        }
        let len = u32::try_from(s.len()).map_err(|_| Error::Parse(s.into()))?;
        if len > Self::MAX_LEN {
            return Err(Error::LengthTooLarge {
                len,
                max: Self::MAX_LEN,
            });
        }
        let mut bits = 0u64;
        for c in s.bytes() {
            bits = (bits << 1)
                | match c {
                    b'0' => 0,
                    b'1' => 1,
                    _ => return Err(Error::Parse(s.into())),
                };
        }
        Ok(Self::from_raw(bits, len))
    }
}

impl Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let len = u32::try_from(s.len()).map_err(serde::de::Error::custom)?;
        BitString::parse_exact(&s, len).map_err(serde::de::Error::custom)
    }
}

/// The string classes used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StringClass {
    /// Every binary string.
    All,
    /// No `11` factor.
    Fib,
    /// Fibonacci strings not beginning with 1.
    Fib0Dot,
    /// Fibonacci strings beginning with 1.
    Fib1Dot,
    /// Fibonacci strings not ending with 1.
    FibDot0,
    /// Fibonacci strings ending with 1.
    FibDot1,
    /// Fibonacci strings neither beginning nor ending with 1.
    Fib00,
    /// Fibonacci strings with `x1 x_n != 11`.
    Lucas,
    /// Strings containing `11`.
    NonFib,
}

impl StringClass {
    pub const ALL: [StringClass; 9] = [
        StringClass::All,
        StringClass::Fib,
        StringClass::Fib0Dot,
        StringClass::Fib1Dot,
        StringClass::FibDot0,
        StringClass::FibDot1,
        StringClass::Fib00,
        StringClass::Lucas,
        StringClass::NonFib,
    ];

    fn is_fib_subclass(self) -> bool {
        !matches!(self, StringClass::All | StringClass::NonFib)
    }
}

impl fmt::Display for StringClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StringClass::All => "all",
            StringClass::Fib => "fib",
            StringClass::Fib0Dot => "fib0.",
            StringClass::Fib1Dot => "fib1.",
            StringClass::FibDot0 => "fib.0",
            StringClass::FibDot1 => "fib.1",
            StringClass::Fib00 => "fib00",
            StringClass::Lucas => "lucas",
            StringClass::NonFib => "nonfib",
        };
        f.write_str(s)
    }
}

/// `F_k` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(k: u32) -> Result<Count> {
    if k == 0 {
        return Ok(0);
    }
    let (mut a, mut b): (Count, Count) = (0, 1);
    for _ in 1..k {
        let next = arith::add(a, b, "Fibonacci number")?;
        a = b;
        b = next;
    }
    Ok(b)
}

/// `F_k` for a possibly negative index, zero below 0. Sum bounds in several
/// closed forms run one step below zero, where the term is absent.
pub(crate) fn fib_signed(k: i64) -> Result<Count> {
    if k < 0 {
        Ok(0)
    } else {
        fibonacci(k as u32)
    }
}

pub fn is_member(s: &BitString, class: StringClass) -> bool {
    let n = s.len();
    let fib = !s.has_adjacent_ones();
    let first_one = n >= 1 && s.bit(1);
    let last_one = n >= 1 && s.bit(n);
    match class {
        StringClass::All => true,
        StringClass::NonFib => !fib,
        StringClass::Fib => fib,
        StringClass::Fib0Dot => fib && !first_one,
        StringClass::Fib1Dot => fib && first_one,
        StringClass::FibDot0 => fib && !last_one,
        StringClass::FibDot1 => fib && last_one,
        StringClass::Fib00 => fib && !first_one && !last_one,
        StringClass::Lucas => fib && !(first_one && last_one),
    }
}

fn check_cap(n: u32, cap: u32) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if n > BitString::MAX_LEN {
        return Err(Error::LengthTooLarge {
            len: n,
            max: BitString::MAX_LEN,
        });
    }
    Ok(())
}

/// Numeric values of the length-`n` Fibonacci strings, ascending.
fn fib_values(n: u32) -> Vec<u64> {
    // Depth-first, 0 before 1, most significant position first: this emits
    // values in ascending order.
    fn walk(n: u32, depth: u32, acc: u64, last_one: bool, out: &mut Vec<u64>) {
        if depth == n {
            out.push(acc);
            return;
        }
        walk(n, depth + 1, acc << 1, false, out);
        if !last_one {
            walk(n, depth + 1, (acc << 1) | 1, true, out);
        }
    }
    let mut out = Vec::new();
    walk(n, 0, 0, false, &mut out);
    out
}

/// Numeric values of the length-`n` members of `class`, ascending.
pub(crate) fn member_values(n: u32, class: StringClass, cap: u32) -> Result<Vec<u64>> {
    check_cap(n, cap)?;
    if class.is_fib_subclass() {
        let mut v = fib_values(n);
        if class != StringClass::Fib {
            v.retain(|&b| is_member(&BitString::from_raw(b, n), class));
        }
        return Ok(v);
    }
    let all = 0..=mask(n);
    Ok(match class {
        StringClass::All => all.collect(),
        _ => all.filter(|&b| b & (b >> 1) != 0).collect(),
    })
}

/// All length-`n` members of `class` in ascending numeric order, with the
/// default cap.
pub fn enumerate(n: u32, class: StringClass) -> Result<Vec<BitString>> {
    enumerate_capped(n, class, DEFAULT_CAP)
}

pub fn enumerate_capped(n: u32, class: StringClass, cap: u32) -> Result<Vec<BitString>> {
    Ok(member_values(n, class, cap)?
        .into_iter()
        .map(|b| BitString::from_raw(b, n))
        .collect())
}

/// `L_n = F_{n-1} + F_{n+1}` for `n >= 1`.
pub fn lucas_number(n: u32) -> Result<Count> {
    if n == 0 {
        return Ok(2);
    }
    arith::add(fibonacci(n - 1)?, fibonacci(n + 1)?, "Lucas number")
}

/// Number of length-`n` members of `class`, by closed form.
pub fn count_class(n: u32, class: StringClass) -> Result<Count> {
    match class {
        StringClass::All => arith::pow2(n, "2^n"),
        StringClass::Fib => fibonacci(n + 2),
        StringClass::Fib0Dot | StringClass::FibDot0 => fibonacci(n + 1),
        StringClass::Fib1Dot | StringClass::FibDot1 => fibonacci(n),
        StringClass::Fib00 if n == 0 => Ok(1),
        StringClass::Fib00 => fibonacci(n),
        // Luc_0 = {ε}, whereas L_0 = 2.
        StringClass::Lucas if n == 0 => Ok(1),
        StringClass::Lucas => lucas_number(n),
        StringClass::NonFib => arith::sub(
            arith::pow2(n, "2^n")?,
            fibonacci(n + 2)?,
            "non-Fibonacci count",
        ),
    }
}

/// Total number of 0s over all Fibonacci strings of length `n`:
/// `sum_{i=1..n} F_{i+1} F_{n-i+2}`.
pub fn total_zeros_in_fib(n: u32) -> Result<Count> {
    let mut total: Count = 0;
    for i in 1..=n {
        let term = arith::mul(fibonacci(i + 1)?, fibonacci(n - i + 2)?, "zero total")?;
        total = arith::add(total, term, "zero total")?;
    }
    Ok(total)
}
