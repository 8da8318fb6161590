use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{multiply_monomials, AlgebraSignature, ExteriorMonomial};

/// An integer combination of basis monomials of `H*(M0)`.
///
/// Stored sparsely: no zero coefficients, no monomials outside the
/// truncation of the signature it was built for.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<ExteriorMonomial, i64>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(ExteriorMonomial::ONE, 1)
    }

    fn from_monomial(m: ExteriorMonomial, coeff: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(m, coeff);
        out
    }

    /// `coeff * m`, or zero if `m` vanishes in the algebra of `sig`.
    pub fn monomial(m: ExteriorMonomial, coeff: i64, sig: AlgebraSignature) -> Self {
        if sig.admits(m) {
            Self::from_monomial(m, coeff)
        } else {
            Self::zero()
        }
    }

    /// The generator `e_i`; zero when `r = 1` and `i >= 1`.
    pub fn generator(index: usize, sig: AlgebraSignature) -> Self {
        Self::monomial(ExteriorMonomial::generator(index), 1, sig)
    }

    pub fn from_terms<I>(terms: I, sig: AlgebraSignature) -> Self
    where
        I: IntoIterator<Item = (ExteriorMonomial, i64)>,
    {
        let mut out = Self::zero();
        for (m, c) in terms {
            if sig.admits(m) {
                out.add_term(m, c);
            }
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: ExteriorMonomial, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&m);
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

    pub fn coefficient(&self, m: ExteriorMonomial) -> i64 {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (ExteriorMonomial, i64)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, factor: i64) -> Self {
        if factor == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * factor)).collect(),
        }
    }

    /// Bilinear extension of [`multiply_monomials`].
    pub fn mul(&self, other: &Self, sig: AlgebraSignature) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((sign, m)) = multiply_monomials(*a, *b, sig) {
                    out.add_term(m, sign * ca * cb);
                }
            }
        }
        out
    }
}

impl Add<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, c);
        }
        out
    }
}

impl Sub<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, -c);
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.scale(-1)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(m, c)| (m.to_string(), *c)))
    }
}

pub(super) fn write_sum<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, i64)>,
{
    let mut first = true;
    for (label, c) in terms {
        let sign = if c < 0 {
            "-"
        } else if first {
            ""
        } else {
            "+"
        };
        if !first {
            f.write_str(" ")?;
        }
        let mag = c.unsigned_abs();
        if mag == 1 {
            write!(f, "{sign}{label}")?;
        } else {
            write!(f, "{sign}{mag}*{label}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
