//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FockError {
    /// Invalid argument (out-of-range order, bad parameter for a named
    /// multiplier, empty set, ...).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// An integrand produced a non-finite value; carries the offending node.
    #[error("evaluation error at node {node:?}: {reason}")]
    Evaluation { node: Vec<f64>, reason: String },

    /// Two values live on different truncation bases or dimensions.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    /// Generic numeric failure (overflow guard tripped, invalid matrix, ...).
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// An iteration did not converge; the message carries the last iterate.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// Input outside the domain where the operation is well conditioned.
    #[error("domain error: {0}")]
    Domain(String),

    /// Request refused because it would exceed the desk-scale cost budget.
    #[error("cost guard: {0}")]
    CostGuard(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, FockError>;
