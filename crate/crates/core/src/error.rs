use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime in 5..2^31")]
    InvalidPrime(u64),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("degree must be nonnegative, got {0}")]
    NegativeDegree(i64),

    #[error("hyperplane covector must be nonzero")]
    ZeroCovector,

    #[error("quotient map has rank {rank}, expected {expected}")]
    NotSurjective { rank: usize, expected: usize },

    #[error("extra covectors are dependent modulo the quotient ({rank} < {expected})")]
    DependentCovectors { rank: usize, expected: usize },

    #[error("subspace T is not contained in Z'")]
    NotContained,

    #[error("Z is not transverse to A⊗H.V: dim Z' = {got}, expected {expected}")]
    NonTransverse { got: usize, expected: usize },

    #[error(
        "no surjectivity certificate up to degree {0}; the sheaf map may fail to be surjective"
    )]
    NotLocallyFree(usize),

    #[error("inadmissible parameters (a={a}, b={b}, f={f}): {reason}")]
    InadmissibleParams {
        a: usize,
        b: usize,
        f: i64,
        reason: String,
    },

    #[error("sampling failed after {0} attempts")]
    SamplingFailed(usize),

    #[error("dim ker m(1) = {got}, expected {expected}")]
    KernelDimMismatch { got: usize, expected: usize },

    #[error("f = {f} exceeds a = {a}")]
    TooManyForms { a: usize, f: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
