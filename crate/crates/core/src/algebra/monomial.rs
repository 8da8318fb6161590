use std::fmt;

use super::AlgebraSignature;

/// A square-free product `e_{i1} e_{i2} ... e_{ik}` with `i1 < ... < ik`,
/// stored as a bit set over generator indices (bit 0 is `e0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExteriorMonomial(u64);

impl ExteriorMonomial {
    /// The empty product, `1`.
    pub const ONE: Self = Self(0);

    pub const fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn generator(index: usize) -> Self {
        debug_assert!(index < 64);
        Self(1 << index)
    }

    /// Builds `e_I` from any collection of indices; duplicates collapse.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Self(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Degree in the truncated factor (generators other than `e0`).
    pub fn base_degree(self) -> usize {
        (self.0 & !1).count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 & (1 << index) != 0
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Increasing list of generator indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                i
            })
        })
    }
}

impl fmt::Display for ExteriorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for i in self.indices() {
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

/// Exterior product of two canonical monomials in `H*(M0)`.
///
/// Returns `None` when the factors share a generator or the product leaves
/// the truncation; otherwise the sorted union together with the sign
/// `(-1)^inv`, `inv` being the number of pairs `(i in a, j in b)` with `i > j`.
pub fn multiply_monomials(
    a: ExteriorMonomial,
    b: ExteriorMonomial,
    sig: AlgebraSignature,
) -> Option<(i64, ExteriorMonomial)> {
    if a.0 & b.0 != 0 {
        return None;
    }
    let product = ExteriorMonomial(a.0 | b.0);
    if !sig.admits(product) {
        return None;
    }
    let inversions: u32 = b.indices().map(|j| (a.0 >> j >> 1).count_ones()).sum();
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Some((sign, product))
}
