use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
    #[error("{context}: {source}")]
    Core {
        context: String,
        #[source]
        source: sbtg_core::Error,
    },
    #[error("instance has no group, which `{0}` needs")]
    NoGroup(&'static str),
    #[error("{0}")]
    Incident(String),
}

impl CliError {
    pub fn core(context: impl Into<String>) -> impl FnOnce(sbtg_core::Error) -> Self {
        let context = context.into();
        move |source| Self::Core { context, source }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
