use thiserror::Error;

/// Errors produced by `tc-core`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature (n = {n}, r = {r}): {reason}")]
    InvalidSignature {
        n: usize,
        r: usize,
        reason: &'static str,
    },
    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("agreement set must have {expected} distinct indices in 1..={max}, got {got:?}")]
    InvalidIndexSet {
        expected: usize,
        max: usize,
        got: Vec<usize>,
    },
    #[error("zero-divisor product vanished for n = {n}, r = {r}")]
    CertificateFailure { n: usize, r: usize },
    #[error("brute-force search capped at n <= {cap}, got n = {n}")]
    InstanceTooLarge { n: usize, cap: usize },
    #[error("lower bound {lower} disagrees with upper bound {upper} for n = {n}, r = {r}")]
    BoundMismatch {
        n: usize,
        r: usize,
        lower: usize,
        upper: usize,
    },
    #[error("expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid endpoint: {0}")]
    InvalidEndpoint(String),
    #[error("query endpoints mix skeleton and product points")]
    ModeMismatch,
    #[error("time {0} outside [0, 1]")]
    TimeOutOfRange(String),
    #[error("circle path needs distinct endpoints")]
    DegenerateArc,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid turn {0:?}: expected \"p/q\" in [0, 1)")]
    InvalidTurn(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
