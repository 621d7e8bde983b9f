use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("cannot access {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io { .. } => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl From<tlt_core::Error> for CliError {
    fn from(e: tlt_core::Error) -> Self {
        use tlt_core::Error as E;
        match e {
            E::Circuit(_) | E::Majorana(_) => CliError::Config(e.to_string()),
            E::Numerics(_) | E::Projection(_) => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<tlt_core::error::CircuitError> for CliError {
    fn from(e: tlt_core::error::CircuitError) -> Self {
        CliError::Config(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
