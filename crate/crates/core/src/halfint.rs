//! Half-integers, used for genus values.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A number of the form `k/2`, stored as `k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a half-integer: {0:?}")]
pub struct HalfIntParseError(String);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_twice(k: i64) -> HalfInt {
        HalfInt(k)
    }

    pub const fn from_int(n: i64) -> HalfInt {
        HalfInt(2 * n)
    }

    /// Twice the value.
    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The value when integral.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> HalfInt {
        HalfInt::from_int(n)
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

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HalfInt {
    type Err = HalfIntParseError;

    /// Accepts `"2"`, `"1/2"`, `"3/2"`, `"0.5"`, `"1.5"`, `"2.0"`.
    fn from_str(s: &str) -> Result<HalfInt, HalfIntParseError> {
        let err = || HalfIntParseError(s.to_string());
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| err())?;
            return match den.trim() {
                "1" => Ok(HalfInt(2 * num)),
                "2" => Ok(HalfInt(num)),
                _ => Err(err()),
            };
        }
        if let Some((int, frac)) = t.split_once('.') {
            let neg = int.starts_with('-');
            let i: i64 = if int.is_empty() || int == "-" {
                0
            } else {
                int.parse().map_err(|_| err())?
            };
            let frac = frac.trim_end_matches('0');
            let half = match frac {
                "" => 0,
                "5" => 1,
                _ => return Err(err()),
            };
            return Ok(HalfInt(2 * i + if neg { -half } else { half }));
        }
        t.parse::<i64>().map(HalfInt::from_int).map_err(|_| err())
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<HalfInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Float(f64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(n) => Ok(HalfInt::from_int(n)),
            Repr::Float(x) => {
                let k = (x * 2.0).round();
                if (k - x * 2.0).abs() > 1e-9 {
                    return Err(serde::de::Error::custom(format!("not a half-integer: {x}")));
                }
                Ok(HalfInt(k as i64))
            }
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
