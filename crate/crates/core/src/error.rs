use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("sieve bound must be at least 1")]
    ZeroSieveBound,

    #[error("sieve bound {requested} exceeds the memory budget of {max}")]
    SieveBoundTooLarge { requested: u64, max: u64 },

    #[error("argument {arg} is outside the sieve range 0..={bound}")]
    OutOfSieveRange { arg: u64, bound: u64 },

    #[error("x = {x} exceeds the sieve bound {bound}")]
    ExceedsSieveBound { x: u64, bound: u64 },

    #[error("prime counter requires 1 <= x <= {max}, got {x}")]
    CounterRange { x: u64, max: u64 },

    #[error("blocked summation requires shift a = 0 (got a = {0}); use the naive algorithm")]
    BlockedShiftUnsupported(i64),

    #[error("li(x) requires x >= 2, got {0}")]
    LiDomain(f64),

    #[error("main term requires x >= 3, got {0}")]
    MainTermDomain(u64),

    #[error("divisor indicator requires d >= 1")]
    ZeroModulus,

    #[error("integer overflow in exact accumulation")]
    Overflow,

    #[error("least-squares fit needs at least {needed} strictly increasing sample points, got {got}")]
    FitTooFewPoints { needed: usize, got: usize },

    #[error("sample points must be strictly increasing")]
    FitNotIncreasing,

    #[error("degenerate design matrix in least-squares fit")]
    DegenerateFit,

    #[error("summand function failed at argument {arg}: {reason}")]
    SummandFailed { arg: u64, reason: String },
}
