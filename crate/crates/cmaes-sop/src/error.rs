//! Error type shared across the crate.

use crate::optimizer::TerminationReason;

/// Errors reported by search-space construction, the CMA machinery, and the
/// ask–tell optimizer.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    InvalidDimension,
    #[error("fitness value at index {index} is not finite")]
    InvalidFitness { index: usize },
    #[error("expected {expected} fitness values, got {got}")]
    FitnessCount { expected: usize, got: usize },
    #[error("covariance matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("distribution update produced a non-finite value")]
    NonFiniteUpdate,
    #[error("optimizer already terminated ({0})")]
    Terminated(TerminationReason),
    #[error("ask and tell must alternate: {0}")]
    Protocol(&'static str),
    #[error("subspace {index} is not a point set")]
    NotAPointSet { index: usize },
    #[error("search space has no subspaces")]
    EmptySearchSpace,
    #[error("point set has no points")]
    EmptyPointSet,
    #[error("point {index} has {got} coordinates, expected {expected}")]
    PointDimension {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("point {index} has a non-finite coordinate")]
    NonFinitePoint { index: usize },
    #[error("points {first} and {second} are identical")]
    DuplicatePoint { first: usize, second: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
