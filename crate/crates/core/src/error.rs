use thiserror::Error;

/// Errors raised while constructing distributions or evaluating measures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("non-finite probability at index {index}: {value}")]
    NonFiniteProbability { index: usize, value: f64 },

    #[error("negative probability at index {index}: {value}")]
    NegativeProbability { index: usize, value: f64 },

    #[error("probability above one at index {index}: {value}")]
    ProbabilityAboveOne { index: usize, value: f64 },

    #[error("probabilities must sum to 1 (sum = {sum})")]
    SumNotOne { sum: f64 },

    #[error("probabilities must sum to at most 1 (sum = {sum})")]
    SumExceedsOne { sum: f64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("utility at index {index} must be finite and > 0, got {value}")]
    NonPositiveUtility { index: usize, value: f64 },

    #[error("infinite-support family requires a truncation")]
    TruncationRequired,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("all probabilities are zero")]
    AllZeroProbabilities,
}

impl Error {
    /// True for errors caused by evaluating outside the admissible `t` domain.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
