use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of ½ℤ, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub const fn from_doubled(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl From<i64> for HalfInt {
    fn from(v: i64) -> Self {
        HalfInt::from_int(v)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseHalfIntError;

impl fmt::Display for ParseHalfIntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected an integer, k/2, or a decimal ending in .5")
    }
}

impl std::error::Error for ParseHalfIntError {}

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts `3`, `-1/2` and `2.5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(num) = s.strip_suffix("/2") {
            let v: i64 = num.trim().parse().map_err(|_| ParseHalfIntError)?;
            return Ok(HalfInt(v));
        }
        if let Ok(v) = s.parse::<i64>() {
            return v.checked_mul(2).map(HalfInt).ok_or(ParseHalfIntError);
        }
        let v: f64 = s.parse().map_err(|_| ParseHalfIntError)?;
        half_from_f64(v).ok_or(ParseHalfIntError)
    }
}

fn half_from_f64(v: f64) -> Option<HalfInt> {
    let twice = v * 2.0;
    if !twice.is_finite() || twice.fract() != 0.0 || twice.abs() > (1u64 << 52) as f64 {
        return None;
    }
    Some(HalfInt(twice as i64))
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.to_int() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_f64(self.to_f64()),
        }
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = serde_json::Number::deserialize(deserializer)?;
        if let Some(i) = v.as_i64() {
            return i
                .checked_mul(2)
                .map(HalfInt)
                .ok_or_else(|| serde::de::Error::custom("half-integer out of range"));
        }
        v.as_f64()
            .and_then(half_from_f64)
            .ok_or_else(|| serde::de::Error::custom("expected a multiple of 1/2"))
    }
}
