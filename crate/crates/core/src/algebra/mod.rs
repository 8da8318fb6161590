//! Exact arithmetic in the cohomology ring of the Hattori model
//! `M0 = S^1 x skeleton`, i.e. `E(1) (x) E(n-1)^{r-1}`, and in its tensor
//! square.
//!
//! Generator `e0` spans the circle factor; `e1..e_{n-1}` generate the
//! exterior algebra truncated above degree `r - 1`. Coefficients are
//! integers: every certificate used here has coefficients `+-1`, and an
//! integer element is nonzero over `C` iff it is nonzero over `Z`.

mod certificate;
mod cup_length;
mod element;
mod monomial;
mod signature;
mod tensor;

pub use certificate::{lower_bound_certificate, LowerBoundCertificate};
pub use cup_length::{
    zdcl_brute_force, zdcl_brute_force_with_cap, zdcl_degree_one, BruteForceReport,
    DEFAULT_BRUTE_CAP,
};
pub use element::AlgebraElement;
pub use monomial::{multiply_monomials, ExteriorMonomial};
pub use signature::AlgebraSignature;
pub use tensor::{apply_multiplication_map, zero_divisor, TensorElement};
