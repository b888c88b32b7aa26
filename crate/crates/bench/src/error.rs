use std::path::PathBuf;

use symtour::{ConfigError, TourError, TsplibError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Tsplib { path: PathBuf, source: TsplibError },
    #[error("invalid experiment file {path}: {message}")]
    SpecSyntax { path: PathBuf, message: String },
    #[error("invalid experiment: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Tour(#[from] TourError),
    #[error("brute force is limited to 10 cities, got {0}")]
    TooManyCities(usize),
    #[error("cannot encode results: {0}")]
    Encode(String),
}

impl BenchError {
    /// 2 for unreadable or malformed input files, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            BenchError::Read { .. }
            | BenchError::Tsplib { .. }
            | BenchError::SpecSyntax { .. }
            | BenchError::Tour(_) => 2,
            _ => 1,
        }
    }
}
