use std::cmp::Ordering;
use std::f64::consts::{PI, SQRT_2};

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::turn::{ratio_to_f64, Rational, Turn};
use crate::{Error, Result};

/// A switching time of a local rule. Exact when it is rational, which is
/// always the case at the basepoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseTime {
    Exact(Rational),
    Approx(f64),
}

impl PhaseTime {
    pub fn to_f64(self) -> f64 {
        match self {
            PhaseTime::Exact(r) => ratio_to_f64(r),
            PhaseTime::Approx(x) => x,
        }
    }

    pub fn exact(self) -> Option<Rational> {
        match self {
            PhaseTime::Exact(r) => Some(r),
            PhaseTime::Approx(_) => None,
        }
    }

    /// Order of `self` relative to the rational `t`. An irrational time
    /// never equals a rational one, so `Equal` only arises for exact times.
    pub fn cmp_time(self, t: Rational) -> Ordering {
        match self {
            PhaseTime::Exact(r) => r.cmp(&t),
            PhaseTime::Approx(x) => {
                if x < ratio_to_f64(t) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    /// `1 - self`.
    pub fn complement(self) -> PhaseTime {
        match self {
            PhaseTime::Exact(r) => PhaseTime::Exact(Rational::one() - r),
            PhaseTime::Approx(x) => PhaseTime::Approx(1.0 - x),
        }
    }
}

/// The waiting time `tau(z) = (1 - |z - 1| / sqrt 2) / 2` when
/// `|z - 1| <= sqrt 2`, and `0` otherwise.
///
/// With `z` at `theta` turns, `|z - 1| = 2 sin(pi * min(theta, 1 - theta))`,
/// so the first case is `theta` within a quarter turn of the basepoint.
/// `tau(0) = 1/2` and `tau = 0` on `[1/4, 3/4]` are returned exactly.
pub fn tau(z: Turn) -> PhaseTime {
    let distance = z.basepoint_distance();
    if distance.is_zero() {
        return PhaseTime::Exact(Ratio::new(1, 2));
    }
    if distance >= Ratio::new(1, 4) {
        return PhaseTime::Exact(Rational::zero());
    }
    let chord = 2.0 * (PI * ratio_to_f64(distance)).sin();
    PhaseTime::Approx((0.5 * (1.0 - chord / SQRT_2)).max(0.0))
}

/// Counterclockwise constant-speed arc from `z` to `z_prime`, at local time
/// `s`: `z + s * ((z_prime - z) mod 1)`.
pub fn zeta(z: Turn, z_prime: Turn, s: Rational) -> Result<Turn> {
    if z == z_prime {
        return Err(Error::DegenerateArc);
    }
    Ok(z.rotate(s * z.ccw_delta(z_prime)))
}

/// Floating-point [`zeta`], returning turns in `[0, 1)`.
pub fn zeta_approx(z: Turn, z_prime: Turn, s: f64) -> Result<f64> {
    if z == z_prime {
        return Err(Error::DegenerateArc);
    }
    Ok(wrap_unit(
        z.to_f64() + s * ratio_to_f64(z.ccw_delta(z_prime)),
    ))
}

pub(crate) fn wrap_unit(x: f64) -> f64 {
    let w = x.rem_euclid(1.0);
    if w >= 1.0 {
        0.0
    } else {
        w
    }
}
