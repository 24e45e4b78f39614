use thiserror::Error;

/// Failure classes with stable process exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Config(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<o2sim_core::Error> for CliError {
    fn from(e: o2sim_core::Error) -> Self {
        match e {
            o2sim_core::Error::Config(msg) => CliError::Config(msg),
            other => CliError::Usage(other.to_string()),
        }
    }
}
