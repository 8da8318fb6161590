//! Fixtures shared by the criterion benches.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tc_core::simulate::{random_query, DEFAULT_DENOMINATOR_BOUND};
use tc_core::{AlgebraSignature, PlannerQuery};

/// `count` reproducible random queries for `sig`.
pub fn queries(sig: AlgebraSignature, count: usize, product: bool, seed: u64) -> Vec<PlannerQuery> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_query(sig, &mut rng, DEFAULT_DENOMINATOR_BOUND, product))
        .collect()
}
