use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] hecke_core::Error),

    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for usage and validation errors, 3 for resource bounds, 4 for
    /// internal consistency failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(hecke_core::Error::BoundExceeded { .. }) => 3,
            CliError::Core(hecke_core::Error::Internal(_)) => 4,
            _ => 2,
        }
    }
}
