//! Points of the Hattori skeleton `union_{|I| = r-1} T^{n-1}_I` (the
//! `(r-1)`-skeleton of the standard CW structure on the torus `T^{n-1}`)
//! and of `M0 = S^1 x skeleton`.
//!
//! Torus coordinates are numbered `1..=n-1`; index sets reported here use
//! that numbering.

use std::collections::BTreeSet;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraSignature;
use crate::turn::Turn;
use crate::{Error, Result};

/// Result of a membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// `{j : coords[j] != 0}`, 1-based.
    pub support: BTreeSet<usize>,
}

/// Tests whether `coords` lies in the skeleton: at most `r - 1` coordinates
/// differ from the basepoint.
pub fn membership(coords: &[Turn], sig: AlgebraSignature) -> Result<Membership> {
    if coords.len() != sig.base_dim() {
        return Err(Error::LengthMismatch {
            expected: sig.base_dim(),
            got: coords.len(),
        });
    }
    let support: BTreeSet<usize> = coords
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.is_basepoint())
        .map(|(j, _)| j + 1)
        .collect();
    Ok(Membership {
        member: support.len() <= sig.truncation(),
        support,
    })
}

/// A point of the skeleton, or of `M0` when `circle` is present.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkeletonPoint {
    base: Vec<Turn>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    circle: Option<Turn>,
}

impl SkeletonPoint {
    /// Validates membership of `base` for `sig`.
    pub fn new(base: Vec<Turn>, circle: Option<Turn>, sig: AlgebraSignature) -> Result<Self> {
        let m = membership(&base, sig)?;
        if !m.member {
            return Err(Error::InvalidEndpoint(format!(
                "support {:?} has {} coordinates, at most {} allowed",
                m.support,
                m.support.len(),
                sig.truncation()
            )));
        }
        Ok(Self { base, circle })
    }

    /// The skeleton basepoint `(1, ..., 1)`.
    pub fn basepoint(sig: AlgebraSignature, with_circle: bool) -> Self {
        Self {
            base: vec![Turn::ZERO; sig.base_dim()],
            circle: with_circle.then_some(Turn::ZERO),
        }
    }

    pub fn base(&self) -> &[Turn] {
        &self.base
    }

    pub fn circle(&self) -> Option<Turn> {
        self.circle
    }

    pub fn is_product(&self) -> bool {
        self.circle.is_some()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.base
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.is_basepoint())
            .map(|(j, _)| j + 1)
            .collect()
    }

    /// Rechecks membership, e.g. after deserialization.
    pub fn validate(&self, sig: AlgebraSignature) -> Result<()> {
        Self::new(self.base.clone(), self.circle, sig).map(|_| ())
    }
}

fn random_turn<R: Rng + ?Sized>(rng: &mut R, denominator_bound: i64) -> Turn {
    let q = rng.gen_range(2..=denominator_bound.max(2));
    let p = rng.gen_range(0..q);
    Turn::from_fraction(p, q).expect("0 <= p < q")
}

/// Draws a random skeleton point.
///
/// A support `I` with `|I| = r - 1` is chosen uniformly; coordinates on `I`
/// are random turns `p/q` with `2 <= q <= denominator_bound`, all others are
/// the basepoint. Coordinates on `I` may come out as `0`, which lands the
/// point in a lower stratum.
pub fn sample<R: Rng + ?Sized>(
    sig: AlgebraSignature,
    rng: &mut R,
    denominator_bound: i64,
    with_circle: bool,
) -> SkeletonPoint {
    let mut base = vec![Turn::ZERO; sig.base_dim()];
    for j in index::sample(rng, sig.base_dim(), sig.truncation()) {
        base[j] = random_turn(rng, denominator_bound);
    }
    let circle = with_circle.then(|| random_turn(rng, denominator_bound));
    SkeletonPoint { base, circle }
}
