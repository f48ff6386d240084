use std::process::ExitCode;

use tetra_core::TetraError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Integrity(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Mismatch(_) => ExitCode::from(1),
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Integrity(_) | CliError::Io { .. } => ExitCode::from(3),
        }
    }

    pub fn io(context: impl Into<String>) -> impl FnOnce(std::io::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Io { context, source }
    }
}

impl From<TetraError> for CliError {
    fn from(e: TetraError) -> Self {
        match e {
            TetraError::InvalidArgument(_) | TetraError::CeilingExceeded { .. } | TetraError::NonPositiveEdge(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Integrity(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Integrity(format!("csv: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
