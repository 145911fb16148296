use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition `{token}`: {reason}")]
    InvalidPartition { token: String, reason: String },

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("size mismatch: |{lambda}| = {} but |{rho}| = {}", lambda.size(), rho.size())]
    SizeMismatch { lambda: Partition, rho: Partition },

    #[error("degree {degree} exceeds the resource cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("geometric series needs a monomial of positive degree")]
    ConstantSeries,

    #[error("expected a single monomial with coefficient 1")]
    NotAMonomial,

    #[error("shape {0} is not a hook shape")]
    NotAHook(String),

    #[error("tableau uses a single letter and is a fixed point")]
    SingleLetter,

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}
