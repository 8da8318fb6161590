use super::{zero_divisor, AlgebraSignature, ExteriorMonomial, TensorElement};
use crate::{Error, Result};

/// Default largest `n` accepted by [`zdcl_brute_force`].
pub const DEFAULT_BRUTE_CAP: usize = 4;

/// Length of the longest nonzero product of distinct generator
/// zero-divisors `z_0, ..., z_{n-1}`, capped at `max_len`.
///
/// Exhaustive over increasing index sets. A zero partial product is not
/// extended since everything above it in the search is a multiple of it.
pub fn zdcl_degree_one(sig: AlgebraSignature, max_len: usize) -> usize {
    let zs: Vec<TensorElement> = (0..sig.n())
        .map(|i| zero_divisor(i, sig).expect("index < n"))
        .collect();
    let mut best = 0;
    longest_increasing(&zs, sig, 0, &TensorElement::one(), 0, max_len, &mut best);
    best
}

fn longest_increasing(
    zs: &[TensorElement],
    sig: AlgebraSignature,
    start: usize,
    acc: &TensorElement,
    depth: usize,
    max_len: usize,
    best: &mut usize,
) {
    *best = (*best).max(depth);
    if depth == max_len || *best == max_len {
        return;
    }
    for i in start..zs.len() {
        let next = acc.mul(&zs[i], sig);
        if !next.is_zero() {
            longest_increasing(zs, sig, i + 1, &next, depth + 1, max_len, best);
        }
    }
}

/// Outcome of the brute-force cup-length search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceReport {
    pub signature: AlgebraSignature,
    /// Size of the search family `{1 (x) a - a (x) 1 : a basis monomial, deg a >= 1}`.
    pub family_size: usize,
    /// Longest nonzero product found.
    pub zdcl: usize,
    /// Monomials `a` of one longest product, in multiplication order.
    pub witness: Vec<ExteriorMonomial>,
}

/// [`zdcl_brute_force_with_cap`] with [`DEFAULT_BRUTE_CAP`].
pub fn zdcl_brute_force(sig: AlgebraSignature) -> Result<BruteForceReport> {
    zdcl_brute_force_with_cap(sig, DEFAULT_BRUTE_CAP)
}

/// Searches products, repetition allowed, over the zero-divisors attached to
/// every positive-degree basis monomial. This family contains every
/// generator zero-divisor, so the result is at least [`zdcl_degree_one`].
///
/// The family spans the degree-matching part of the zero-divisor ideal but
/// not all of it; the result is a lower bound on the true cup-length.
pub fn zdcl_brute_force_with_cap(sig: AlgebraSignature, cap: usize) -> Result<BruteForceReport> {
    if sig.n() > cap {
        return Err(Error::InstanceTooLarge { n: sig.n(), cap });
    }
    let monomials: Vec<ExteriorMonomial> = sig
        .basis()
        .into_iter()
        .filter(|m| m.degree() >= 1)
        .collect();
    let family: Vec<TensorElement> = monomials
        .iter()
        .map(|&a| TensorElement::difference(a, sig))
        .collect();

    // Every family member has total degree >= 1 and H*(M0) (x) H*(M0) is
    // zero above total degree 2r.
    let max_len = 2 * sig.r();
    let mut search = MultisetSearch {
        family: &family,
        sig,
        max_len,
        stack: Vec::new(),
        best: Vec::new(),
    };
    search.run(0, &TensorElement::one());

    Ok(BruteForceReport {
        signature: sig,
        family_size: family.len(),
        zdcl: search.best.len(),
        witness: search.best.iter().map(|&i| monomials[i]).collect(),
    })
}

struct MultisetSearch<'a> {
    family: &'a [TensorElement],
    sig: AlgebraSignature,
    max_len: usize,
    stack: Vec<usize>,
    best: Vec<usize>,
}

impl MultisetSearch<'_> {
    // Homogeneous factors graded-commute, so nondecreasing index sequences
    // cover every product up to sign.
    fn run(&mut self, start: usize, acc: &TensorElement) {
        if self.stack.len() > self.best.len() {
            self.best = self.stack.clone();
        }
        if self.stack.len() == self.max_len {
            return;
        }
        for i in start..self.family.len() {
            let next = acc.mul(&self.family[i], self.sig);
            if next.is_zero() {
                continue;
            }
            self.stack.push(i);
            self.run(i, &next);
            self.stack.pop();
            if self.best.len() == self.max_len {
                return;
            }
        }
    }
}
