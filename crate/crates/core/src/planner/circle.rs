use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

use super::rules::wrap_unit;
use super::Coord;
use crate::turn::{ratio_to_f64, Rational, Turn};

/// Two-rule planner on `S^1`: rule 0 follows the shorter arc (constant when
/// the endpoints agree), rule 1 handles antipodal pairs with a
/// counterclockwise half turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CircleRule {
    pub from: Turn,
    pub to: Turn,
    /// Signed displacement in turns, `-1/2 < delta <= 1/2`.
    #[serde(serialize_with = "serialize_ratio")]
    pub delta: Rational,
    pub index: usize,
}

fn serialize_ratio<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl CircleRule {
    pub fn new(from: Turn, to: Turn) -> Self {
        let half = Ratio::new(1, 2);
        let ccw = from.ccw_delta(to);
        let (delta, index) = if ccw == half {
            (half, 1)
        } else if ccw < half {
            (ccw, 0)
        } else {
            (ccw - Rational::one(), 0)
        };
        Self {
            from,
            to,
            delta,
            index,
        }
    }

    pub fn evaluate(&self, t: Rational) -> Coord {
        if self.delta.is_zero() || t.is_zero() {
            Coord::Exact(self.from)
        } else if t.is_one() {
            Coord::Exact(self.to)
        } else {
            Coord::Approx(wrap_unit(self.from.to_f64() + ratio_to_f64(t * self.delta)))
        }
    }
}
