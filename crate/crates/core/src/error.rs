use std::path::PathBuf;

use thiserror::Error;

use crate::dynamics::ActuatorState;

pub type Result<T> = std::result::Result<T, VsaError>;

#[derive(Debug, Error)]
pub enum VsaError {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The deflection left the band in which the contact model is defined.
    #[error("model domain violated: |q_d| = {q_d} outside admissible band at t = {}", state.t)]
    ModelDomain { q_d: f64, state: Box<ActuatorState> },

    #[error("non-finite state at t = {}", state.t)]
    NonFinite { state: Box<ActuatorState> },

    #[error("{what} did not converge (last residual {residual:e})")]
    Convergence { what: &'static str, residual: f64 },

    #[error("outside solver domain: {0}")]
    Domain(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: parse error at line {line}, column {column}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("configuration invalid:\n  {}", .0.join("\n  "))]
    Validation(Vec<String>),

    #[error("scenario failed: {0}")]
    Scenario(String),
}

impl VsaError {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        VsaError::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
