use thiserror::Error;

/// Failures raised by the simulation engines.
///
/// Everything here is a precondition or numerical-guard violation; none of
/// the operations perform IO.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{total} photons do not fit below cutoff {cutoff}")]
    CutoffOverflow { total: usize, cutoff: usize },

    #[error("state norm {norm} deviates from 1")]
    NotNormalized { norm: f64 },

    #[error("amplitude vector has length {got}, cutoff {cutoff} needs {expected}")]
    ShapeMismatch {
        cutoff: usize,
        expected: usize,
        got: usize,
    },

    #[error("unphysical Gaussian state: {0}")]
    Unphysical(&'static str),

    #[error("Gaussian state is not pure (det M = {det})")]
    NotPure { det: f64 },

    #[error("expected a {expected}-mode state, got {got} modes")]
    ModeCount { expected: usize, got: usize },

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("standard form is degenerate (product of vacuum-like marginals)")]
    Degenerate,

    #[error("standard-form reduction failed: {0}")]
    StandardForm(&'static str),

    #[error("truncated input keeps only {retained} of the probability")]
    TruncationGuard { retained: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;
