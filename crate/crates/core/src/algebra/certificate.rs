use super::{zero_divisor, AlgebraSignature, ExteriorMonomial, TensorElement};
use crate::{Error, Result};

/// A nonzero product `z0 * prod_{i in J} z_i` of generator zero-divisors,
/// with `|J| = k = min(n - 1, 2r - 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundCertificate {
    pub signature: AlgebraSignature,
    pub k: usize,
    /// The index set `J`, increasing, drawn from `1..=n-1`.
    pub indices: Vec<usize>,
    pub product: TensorElement,
    /// `(r, k + 1 - r)`.
    pub bidegree: (usize, usize),
    /// The part of `product` in `bidegree`; every term is `+-e0 e_I (x) e_{J \ I}`.
    pub component: TensorElement,
}

impl LowerBoundCertificate {
    /// Number of zero-divisor factors, `k + 1`.
    pub fn length(&self) -> usize {
        self.k + 1
    }

    /// The resulting bound `TC >= k + 2`.
    pub fn lower_bound(&self) -> usize {
        self.k + 2
    }

    pub fn sample_term(&self) -> Option<(ExteriorMonomial, ExteriorMonomial, i64)> {
        self.component.terms().next()
    }
}

/// Builds and checks the zero-divisor product certificate for `sig`.
///
/// `indices` overrides the default `J = {1, ..., k}`.
pub fn lower_bound_certificate(
    sig: AlgebraSignature,
    indices: Option<&[usize]>,
) -> Result<LowerBoundCertificate> {
    let (n, r) = (sig.n(), sig.r());
    let k = (n - 1).min(2 * r - 2);
    let indices = match indices {
        None => (1..=k).collect::<Vec<_>>(),
        Some(given) => {
            let mut sorted = given.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            let in_range = sorted.iter().all(|&i| (1..n).contains(&i));
            if sorted.len() != k || given.len() != k || !in_range {
                return Err(Error::InvalidIndexSet {
                    expected: k,
                    max: n - 1,
                    got: given.to_vec(),
                });
            }
            sorted
        }
    };

    let mut product = zero_divisor(0, sig)?;
    for &i in &indices {
        product = product.mul(&zero_divisor(i, sig)?, sig);
    }

    // k >= r - 1 since n >= r, so the right degree is nonnegative.
    let bidegree = (r, k + 1 - r);
    let component = product.component(bidegree.0, bidegree.1);
    let unit_coefficients = component.terms().all(|(_, _, c)| c.abs() == 1);
    if product.is_zero() || component.is_zero() || !unit_coefficients {
        return Err(Error::CertificateFailure { n, r });
    }

    Ok(LowerBoundCertificate {
        signature: sig,
        k,
        indices,
        product,
        bidegree,
        component,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Independent expansion: each factor contributes either its left
    /// `-e_i (x) 1` or its right `1 (x) e_i` summand. Sign is tracked by
    /// moving each chosen generator through everything already placed.
    fn expand_by_choices(sig: AlgebraSignature, factors: &[usize]) -> TensorElement {
        let mut out = TensorElement::zero();
        for choice in 0u32..(1 << factors.len()) {
            let mut left: Vec<usize> = Vec::new();
            let mut right: Vec<usize> = Vec::new();
            let mut sign: i64 = 1;
            for (pos, &i) in factors.iter().enumerate() {
                if choice & (1 << pos) != 0 {
                    // (u (x) v)(e_i (x) 1) = (-1)^{|v|} u e_i (x) v, times -1
                    sign *= -1;
                    if right.len() % 2 == 1 {
                        sign *= -1;
                    }
                    left.push(i);
                } else {
                    right.push(i);
                }
            }
            let sort_sign = |seq: &[usize]| {
                let inv = (0..seq.len())
                    .flat_map(|a| (a + 1..seq.len()).map(move |b| (a, b)))
                    .filter(|&(a, b)| seq[a] > seq[b])
                    .count();
                if inv % 2 == 0 {
                    1
                } else {
                    -1
                }
            };
            let lm = ExteriorMonomial::from_indices(left.iter().copied());
            let rm = ExteriorMonomial::from_indices(right.iter().copied());
            let total = sign * sort_sign(&left) * sort_sign(&right);
            out = &out + &TensorElement::pure(lm, rm, total, sig);
        }
        out
    }

    #[test]
    fn matches_choice_expansion_oracle() {
        for n in 1..=7 {
            for r in 1..=n {
                let sig = AlgebraSignature::new(n, r).unwrap();
                let cert = lower_bound_certificate(sig, None).unwrap();
                let mut factors = vec![0];
                factors.extend(1..=cert.k);
                assert_eq!(cert.product, expand_by_choices(sig, &factors), "{sig}");
            }
        }
    }

    #[test]
    fn component_counts() {
        // (3,2): k = 2, component (2,1) has C(2,1) = 2 terms
        let sig = AlgebraSignature::new(3, 2).unwrap();
        let cert = lower_bound_certificate(sig, None).unwrap();
        assert_eq!(cert.k, 2);
        assert_eq!(cert.bidegree, (2, 1));
        assert_eq!(cert.component.len(), 2);

        // (2,2): k = 1, four tensor terms survive
        let sig = AlgebraSignature::new(2, 2).unwrap();
        let cert = lower_bound_certificate(sig, None).unwrap();
        assert_eq!(cert.k, 1);
        assert_eq!(cert.product.len(), 4);

        // (1,1): k = 0, the product is z0 itself
        let sig = AlgebraSignature::new(1, 1).unwrap();
        let cert = lower_bound_certificate(sig, None).unwrap();
        assert_eq!(cert.k, 0);
        assert_eq!(cert.product, zero_divisor(0, sig).unwrap());
        assert_eq!(cert.lower_bound(), 2);

        // (4,3): k = 3, C(3,2) = 3
        let sig = AlgebraSignature::new(4, 3).unwrap();
        assert_eq!(
            lower_bound_certificate(sig, None).unwrap().component.len(),
            3
        );
    }

    #[test]
    fn all_small_signatures_certify() {
        for n in 1..=8 {
            for r in 1..=n {
                let sig = AlgebraSignature::new(n, r).unwrap();
                let cert = lower_bound_certificate(sig, None).unwrap();
                assert_eq!(cert.component.len(), binom(cert.k, r - 1), "{sig}");
                assert!(cert.product.terms().all(|(_, _, c)| c.abs() == 1));
                for (u, v, _) in cert.component.terms() {
                    assert!(u.contains(0));
                    assert_eq!(
                        u.bits() | v.bits(),
                        ExteriorMonomial::from_indices(0..=cert.k).bits()
                    );
                }
            }
        }
    }

    #[test]
    fn custom_index_set() {
        let sig = AlgebraSignature::new(6, 2).unwrap();
        let cert = lower_bound_certificate(sig, Some(&[5, 3])).unwrap();
        assert_eq!(cert.indices, vec![3, 5]);
        assert_eq!(cert.component.len(), 2);
        assert!(matches!(
            lower_bound_certificate(sig, Some(&[1])),
            Err(Error::InvalidIndexSet { .. })
        ));
        assert!(lower_bound_certificate(sig, Some(&[0, 1])).is_err());
        assert!(lower_bound_certificate(sig, Some(&[2, 2])).is_err());
        assert!(lower_bound_certificate(sig, Some(&[6, 1])).is_err());
    }
}
