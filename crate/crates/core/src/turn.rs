use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub type Rational = Ratio<i64>;

/// A point `exp(2 pi i * value)` of the unit circle, `value` an exact
/// rational in `[0, 1)`. `Turn::ZERO` is the basepoint `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Turn(Rational);

impl Turn {
    pub const ZERO: Self = Turn(Ratio::new_raw(0, 1));

    /// `value`, rejected unless `0 <= value < 1`.
    pub fn new(value: Rational) -> Result<Self> {
        if value < Rational::zero() || value >= Rational::one() {
            return Err(Error::InvalidTurn(value.to_string()));
        }
        Ok(Turn(value))
    }

    /// `value` reduced modulo 1.
    pub fn wrapping(value: Rational) -> Self {
        let frac = value - value.floor();
        Turn(frac)
    }

    pub fn from_fraction(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidTurn(format!("{numer}/{denom}")));
        }
        Self::new(Ratio::new(numer, denom))
    }

    pub fn value(self) -> Rational {
        self.0
    }

    pub fn is_basepoint(self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(self) -> f64 {
        ratio_to_f64(self.0)
    }

    /// Counterclockwise distance to `other`, in `[0, 1)`.
    pub fn ccw_delta(self, other: Turn) -> Rational {
        Turn::wrapping(other.0 - self.0).0
    }

    /// Rotates by `delta` turns.
    pub fn rotate(self, delta: Rational) -> Turn {
        Turn::wrapping(self.0 + delta)
    }

    /// `min(theta, 1 - theta)`: the angular distance to the basepoint.
    pub fn basepoint_distance(self) -> Rational {
        self.0.min(Rational::one() - self.0)
    }
}

pub(crate) fn ratio_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl Default for Turn {
    fn default() -> Self {
        Turn::ZERO
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Turn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidTurn(s.to_string());
        let s_trim = s.trim();
        let value = match s_trim.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(bad());
                }
                Ratio::new(p, q)
            }
            None => Ratio::from_integer(s_trim.parse().map_err(|_| bad())?),
        };
        Turn::new(value).map_err(|_| bad())
    }
}

impl Serialize for Turn {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Turn {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated list such as `0,1/4,2/3`. The empty string is
/// the empty list.
pub fn parse_turns(s: &str) -> Result<Vec<Turn>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(str::parse).collect()
}
