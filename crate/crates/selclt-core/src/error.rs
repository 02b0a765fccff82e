//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter selects an empty domain (e.g. a sieve bound below 2).
    #[error("empty domain: {0}")]
    EmptyDomain(String),

    /// The request exceeds the configured memory budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The requested sum diverges (prime/zeta sums at s <= 1).
    #[error("divergent sum: {0}")]
    DivergentSum(String),

    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The accuracy target cannot be met at the configured truncations.
    /// The message names the limiting truncation.
    #[error("precision: {0}")]
    Precision(String),

    /// Rectangle or interval endpoints are out of order.
    #[error("order error: {0}")]
    Order(String),

    /// Branch tracking of log zeta could not certify a continuous branch.
    #[error("branch uncertainty at t = {t}: {detail}")]
    BranchUncertainty { t: f64, detail: String },

    /// A quality gate failed (e.g. too many excluded samples).
    #[error("quality: {0}")]
    Quality(String),

    /// A quadrature grid cannot reach the requested accuracy.
    #[error("accuracy: {0}")]
    Accuracy(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
