use serde::{Deserialize, Serialize};

use super::ExteriorMonomial;
use crate::{Error, Result};

/// Largest supported number of hyperplanes; monomials are `u64` bit sets.
pub const MAX_GENERATORS: usize = 63;

/// The pair `(n, r)`: `n` hyperplanes in a complex space of dimension `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSignature", into = "RawSignature")]
pub struct AlgebraSignature {
    n: usize,
    r: usize,
}

#[derive(Serialize, Deserialize)]
struct RawSignature {
    n: usize,
    r: usize,
}

impl TryFrom<RawSignature> for AlgebraSignature {
    type Error = Error;

    fn try_from(raw: RawSignature) -> Result<Self> {
        Self::new(raw.n, raw.r)
    }
}

impl From<AlgebraSignature> for RawSignature {
    fn from(sig: AlgebraSignature) -> Self {
        RawSignature { n: sig.n, r: sig.r }
    }
}

impl AlgebraSignature {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        let reason = if r < 1 {
            "r must be at least 1"
        } else if r > n {
            "r exceeds n"
        } else if n > MAX_GENERATORS {
            "n exceeds the supported maximum of 63"
        } else {
            return Ok(Self { n, r });
        };
        Err(Error::InvalidSignature { n, r, reason })
    }

    /// Number of hyperplanes, also the number of generators `e0..e_{n-1}`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Ambient complex dimension.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Degree above which products of `e1..e_{n-1}` vanish.
    pub fn truncation(&self) -> usize {
        self.r - 1
    }

    /// Number of torus coordinates of the skeleton, `n - 1`.
    pub fn base_dim(&self) -> usize {
        self.n - 1
    }

    /// True iff `m` uses only generators `< n` and respects the truncation.
    pub fn admits(&self, m: ExteriorMonomial) -> bool {
        m.max_index().map_or(true, |i| i < self.n) && m.base_degree() <= self.truncation()
    }

    /// All basis monomials of `H*(M0)`, ordered by degree then index set.
    pub fn basis(&self) -> Vec<ExteriorMonomial> {
        let base = self.n - 1;
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << base) {
            if (mask.count_ones() as usize) > self.truncation() {
                continue;
            }
            let shifted = ExteriorMonomial::from_bits(mask << 1);
            out.push(shifted);
            out.push(ExteriorMonomial::from_bits((mask << 1) | 1));
        }
        out.sort_by_key(|m| (m.degree(), *m));
        out
    }
}

impl std::fmt::Display for AlgebraSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n = {}, r = {})", self.n, self.r)
    }
}
