use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or loader rejected an input value. Carries the
    /// offending field name so callers can point at the bad entry.
    #[error("invalid `{field}`: {reason}")]
    Validation { field: String, reason: String },

    /// The comparator never fired within the cycle-span cap.
    #[error("trigger starvation in cycle {cycle}: no crossing within {span_s:.3e} s")]
    TriggerStarvation { cycle: usize, span_s: f64 },

    /// A certificate was requested outside the scope its theorem covers.
    #[error("out of theorem scope: {0}")]
    TheoremScope(String),

    /// Settling is undefined for poles on or outside the unit circle.
    #[error("unstable: settling undefined for pole magnitude {pole_mag}")]
    UnstablePole { pole_mag: f64 },

    /// The spectral functional B diverges for this waveform.
    #[error("non-integrable spectrum: {0}")]
    NonIntegrableSpectrum(String),

    /// A design constraint set admits no solution.
    #[error("infeasible design: {0}")]
    Infeasible(String),

    /// Numerical routine failed (rank-deficient fit, degenerate denominator, ...).
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("config error at {pointer}: {reason}")]
    Config { pointer: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn validation(field: &str, reason: impl Into<String>) -> Self {
        Error::Validation {
            field: field.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
