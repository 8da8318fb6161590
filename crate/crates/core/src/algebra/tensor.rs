use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::element::write_sum;
use super::{multiply_monomials, AlgebraElement, AlgebraSignature, ExteriorMonomial};
use crate::{Error, Result};

type Pair = (ExteriorMonomial, ExteriorMonomial);

/// An integer combination of pure tensors `u (x) v` of basis monomials in
/// `H*(M0) (x) H*(M0)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<Pair, i64>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut out = Self::zero();
        out.add_term((ExteriorMonomial::ONE, ExteriorMonomial::ONE), 1);
        out
    }

    /// `coeff * (u (x) v)`, or zero if either side vanishes for `sig`.
    pub fn pure(
        u: ExteriorMonomial,
        v: ExteriorMonomial,
        coeff: i64,
        sig: AlgebraSignature,
    ) -> Self {
        let mut out = Self::zero();
        if sig.admits(u) && sig.admits(v) {
            out.add_term((u, v), coeff);
        }
        out
    }

    /// `1 (x) a - a (x) 1`, the zero-divisor attached to the class `a`.
    pub fn difference(a: ExteriorMonomial, sig: AlgebraSignature) -> Self {
        let one = ExteriorMonomial::ONE;
        &Self::pure(one, a, 1, sig) - &Self::pure(a, one, 1, sig)
    }

    pub fn from_terms<I>(terms: I, sig: AlgebraSignature) -> Self
    where
        I: IntoIterator<Item = (ExteriorMonomial, ExteriorMonomial, i64)>,
    {
        let mut out = Self::zero();
        for (u, v, c) in terms {
            if sig.admits(u) && sig.admits(v) {
                out.add_term((u, v), c);
            }
        }
        out
    }

    fn add_term(&mut self, key: Pair, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(key).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, u: ExteriorMonomial, v: ExteriorMonomial) -> i64 {
        self.terms.get(&(u, v)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (ExteriorMonomial, ExteriorMonomial, i64)> + '_ {
        self.terms.iter().map(|((u, v), c)| (*u, *v, *c))
    }

    /// The part of bidegree `(s, t)`.
    pub fn component(&self, s: usize, t: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((u, v), _)| u.degree() == s && v.degree() == t)
                .map(|(k, c)| (*k, *c))
                .collect(),
        }
    }

    /// Common total degree `s + t` of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|(u, v)| u.degree() + v.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, factor: i64) -> Self {
        if factor == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c * factor)).collect(),
        }
    }

    /// Product in the graded tensor square:
    /// `(u1 (x) v1)(u2 (x) v2) = (-1)^{|v1||u2|} u1u2 (x) v1v2`.
    pub fn mul(&self, other: &Self, sig: AlgebraSignature) -> Self {
        let mut out = Self::zero();
        for ((u1, v1), c1) in &self.terms {
            for ((u2, v2), c2) in &other.terms {
                let Some((su, u)) = multiply_monomials(*u1, *u2, sig) else {
                    continue;
                };
                let Some((sv, v)) = multiply_monomials(*v1, *v2, sig) else {
                    continue;
                };
                let koszul = if (v1.degree() * u2.degree()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                out.add_term((u, v), koszul * su * sv * c1 * c2);
            }
        }
        out
    }

    /// Product of a sequence of factors, left to right; empty gives `1`.
    pub fn product<'a, I>(factors: I, sig: AlgebraSignature) -> Self
    where
        I: IntoIterator<Item = &'a TensorElement>,
    {
        factors
            .into_iter()
            .fold(Self::one(), |acc, f| acc.mul(f, sig))
    }
}

/// The zero-divisor `1 (x) e_i - e_i (x) 1`.
pub fn zero_divisor(index: usize, sig: AlgebraSignature) -> Result<TensorElement> {
    if index >= sig.n() {
        return Err(Error::IndexOutOfRange { index, n: sig.n() });
    }
    Ok(TensorElement::difference(
        ExteriorMonomial::generator(index),
        sig,
    ))
}

/// The cup-product map `u (x) v -> u v`, extended linearly.
pub fn apply_multiplication_map(x: &TensorElement, sig: AlgebraSignature) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (u, v, c) in x.terms() {
        if let Some((sign, m)) = multiply_monomials(u, v, sig) {
            out.add_term(m, sign * c);
        }
    }
    out
}

impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;

    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, *c);
        }
        out
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;

    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;

    fn neg(self) -> TensorElement {
        self.scale(-1)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms
                .iter()
                .map(|((u, v), c)| (format!("{u}(x){v}"), *c)),
        )
    }
}
