use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: not a valid state file: {source}", path.display())]
    Parse {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{}: state `{name}`: {source}", path.display())]
    State {
        path: PathBuf,
        name: String,
        source: catalyst_core::Error,
    },
    #[error(transparent)]
    Core(#[from] catalyst_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot start the thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn parse(path: &Path, source: serde_json::Error) -> Self {
        CliError::Parse {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn state(path: &Path, name: &str, source: catalyst_core::Error) -> Self {
        CliError::State {
            path: path.to_path_buf(),
            name: name.to_string(),
            source,
        }
    }
}
