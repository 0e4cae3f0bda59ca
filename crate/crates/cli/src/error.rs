use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Domain(tensorideal_core::Error),
}

impl From<tensorideal_core::Error> for CliError {
    fn from(e: tensorideal_core::Error) -> Self {
        match e {
            tensorideal_core::Error::Parse(m) => CliError::Parse(m),
            other => CliError::Domain(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Io { .. } | CliError::Parse(_) => 2,
        }
    }
}
