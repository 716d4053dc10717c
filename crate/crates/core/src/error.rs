use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("expected m <= n, got m = {m}, n = {n}")]
    Unordered { m: u64, n: u64 },

    #[error("{0} must be positive")]
    ZeroArgument(&'static str),

    #[error("m + n = {sum} is too large (limit is 2^31 - 1)")]
    TooLarge { sum: u64 },

    #[error("({m}, {n}) is outside the range of {criterion} for p = {p}: {reason}")]
    OutOfTheoremRange {
        m: u64,
        n: u64,
        p: u64,
        criterion: &'static str,
        reason: &'static str,
    },

    #[error(
        "classification undefined for p=2 (conditions for lambda(m, n, 2) to be standard are open)"
    )]
    ClassificationOpen,

    #[error("matrix side m*n = {side} exceeds the oracle size budget of {budget}")]
    BudgetExceeded { side: u64, budget: u64 },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("modulus {0} is too large for the GF(p) oracle (limit is 2^31)")]
    ModulusTooLarge(u64),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not unipotent")]
    NotUnipotent,

    #[error("invalid Jordan partition {parts:?} for m = {m}, n = {n}: {reason}")]
    InvalidPartition {
        parts: Vec<u64>,
        m: u64,
        n: u64,
        reason: &'static str,
    },

    #[error("internal error: {0}")]
    Internal(String),
}
