use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("coefficient vector is empty")]
    Empty,

    #[error("entry {index} is not a finite number ({value})")]
    NonFinite { index: usize, value: f64 },

    #[error("entry {index} is negative ({value})")]
    NegativeEntry { index: usize, value: f64 },

    #[error("coefficients sum to {sum}, not 1")]
    NotNormalized { sum: f64 },

    #[error("cannot pad a vector of length {len} to length {target}")]
    TargetTooSmall { len: usize, target: usize },

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate target: second coefficient of the target is zero")]
    DegenerateTarget,

    #[error("not a catalyst: the product spectra are not related by majorization")]
    NotACatalyst,

    #[error(
        "pair generation exhausted after {attempts} attempts with {accepted} accepted: {reason}"
    )]
    GenerationExhausted {
        attempts: u64,
        accepted: usize,
        reason: String,
    },

    #[error("unknown search strategy `{0}`")]
    UnknownStrategy(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
