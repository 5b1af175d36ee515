use thiserror::Error;
use wilson_daha::Error as LibError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Admissibility(String),
    #[error("{0}")]
    Tolerance(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Admissibility(_) => 2,
            CliError::Parse(_) | CliError::Io { .. } => 3,
            CliError::Tolerance(_) => 4,
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<LibError> for CliError {
    fn from(e: LibError) -> Self {
        let msg = e.to_string();
        match e {
            LibError::Parse(_) | LibError::NotSymmetric | LibError::Index(_) | LibError::IndexResolution(_) => CliError::Parse(msg),
            LibError::ToleranceNotMet { .. }
            | LibError::ConvergenceBudget { .. }
            | LibError::Divergence(_)
            | LibError::NoDecay(_)
            | LibError::NonTerminating => CliError::Tolerance(msg),
            _ => CliError::Admissibility(msg),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
