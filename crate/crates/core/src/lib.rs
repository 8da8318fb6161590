//! Topological complexity of the complement of a generic arrangement of
//! `n` complex hyperplanes in `C^r`, made executable.
//!
//! The complement is modelled by `M0 = S^1 x K`, where `K` is the
//! `(r - 1)`-skeleton of the torus `T^{n-1}`. The crate provides
//!
//! * [`algebra`]: the cohomology ring of `M0` and its tensor square, and a
//!   nonzero product of `min(n + 1, 2r) - 1` zero-divisors certifying the
//!   lower bound;
//! * [`skeleton`]: exact points of `K` and `M0`;
//! * [`planner`]: an explicit motion planner with `n` rules on `K` and
//!   `n + 1` rules on `M0`;
//! * [`bounds`]: the reconciliation `TC = min(n + 1, 2r)`;
//! * [`simulate`]: randomized verification of the planner invariants.

pub mod algebra;
pub mod bounds;
mod error;
pub mod planner;
pub mod simulate;
pub mod skeleton;
mod turn;

pub use algebra::AlgebraSignature;
pub use bounds::{compute_bounds, TcBounds};
pub use error::{Error, Result};
pub use planner::{PlannerPath, PlannerQuery};
pub use skeleton::SkeletonPoint;
pub use turn::{parse_turns, Rational, Turn};
