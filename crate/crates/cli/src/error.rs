use thiserror::Error;

/// Failures surfaced to the command line, each with its exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid arguments: {0}")]
    Usage(String),

    #[error(transparent)]
    Numerical(#[from] beamsplit_core::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        Self::Usage(msg.into())
    }

    /// 2 for bad arguments, 3 for numerical guards, 1 for IO.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            Self::Numerical(_) => 3,
            Self::Io(_) | Self::Csv(_) | Self::Json(_) => 1,
        }
    }
}
