use crate::artifact::ArtifactError;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const VERIFICATION_FAILED: u8 = 2;
    pub const CROSSCHECK_MISMATCH: u8 = 3;
    pub const RESOURCE_BOUND: u8 = 4;
    pub const IO: u8 = 5;
}

/// Failures that stop a command before it produces a report.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Resource(_) => exit::RESOURCE_BOUND,
            CliError::Io(_) => exit::IO,
        }
    }
}

impl From<semilinear_ast::Error> for CliError {
    fn from(e: semilinear_ast::Error) -> Self {
        match e {
            semilinear_ast::Error::ResourceBound { .. } => CliError::Resource(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<ArtifactError> for CliError {
    fn from(e: ArtifactError) -> Self {
        CliError::Io(e.to_string())
    }
}
