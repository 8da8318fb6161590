//! Reconciles the zero-divisor lower bound with the two upper bounds into
//! `TC(M) = min(n + 1, 2r)`.

use serde::Serialize;

use crate::algebra::{lower_bound_certificate, AlgebraSignature};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TcBounds {
    pub n: usize,
    pub r: usize,
    /// One more than the length of the certified nonzero zero-divisor product.
    pub lower: usize,
    /// Rule count of the explicit planner on `M0`, `n + 1`.
    pub upper_constructive: usize,
    /// `TC(skeleton) <= 2 dim + 1` for `dim = r - 1`, plus one for the circle.
    pub upper_dimension: usize,
    pub tc: usize,
}

impl TcBounds {
    /// True iff the explicit planner attains the topological complexity.
    pub fn constructive_tight(&self) -> bool {
        self.upper_constructive == self.tc
    }
}

/// Computes all bounds for `(n, r)`; the lower bound comes from an actual
/// certificate product, not from the closed formula.
pub fn compute_bounds(n: usize, r: usize) -> Result<TcBounds> {
    let sig = AlgebraSignature::new(n, r)?;
    let certificate = lower_bound_certificate(sig, None)?;
    let lower = certificate.length() + 1;

    let skeleton_dim = r - 1;
    let skeleton_tc_bound = 2 * skeleton_dim + 1;
    let upper_dimension = skeleton_tc_bound + 1;
    let upper_constructive = n + 1;
    let upper = upper_constructive.min(upper_dimension);

    if lower != upper {
        return Err(Error::BoundMismatch { n, r, lower, upper });
    }
    Ok(TcBounds {
        n,
        r,
        lower,
        upper_constructive,
        upper_dimension,
        tc: upper,
    })
}

/// Bounds for every `(n, r)` with `n` in `ns` and `1 <= r <= min(n, r_max)`,
/// in `(n, r)` order.
pub fn bounds_table(
    ns: std::ops::RangeInclusive<usize>,
    r_max: Option<usize>,
) -> Result<Vec<TcBounds>> {
    let mut rows = Vec::new();
    for n in ns {
        for r in 1..=r_max.map_or(n, |m| m.min(n)) {
            rows.push(compute_bounds(n, r)?);
        }
    }
    Ok(rows)
}
