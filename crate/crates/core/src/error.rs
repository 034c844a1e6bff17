use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("orbit index {p} out of range 0..={max} for {space}")]
    OutOfRange { space: String, p: i64, max: i64 },

    #[error("dense orbit: composition series formula not applicable for {0}")]
    DenseOrbit(String),

    #[error("empty support")]
    EmptySupport,

    #[error("partition oracle is capped at a <= {cap}, got a = {a}")]
    OracleCap { a: i64, cap: i64 },

    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
