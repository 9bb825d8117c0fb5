use thiserror::Error;

/// Errors surfaced by the command-line front end.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] conormal_core::Error),
    #[error("invalid input: {0}")]
    Format(String),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 when an identity asserted by a construction failed, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(conormal_core::Error::IdentityFailed(_)) => 1,
            _ => 2,
        }
    }
}
