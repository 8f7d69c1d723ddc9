//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{path}: missing required column '{column}'")]
    MissingColumn { path: PathBuf, column: &'static str },

    #[error("empty corpus: {0}")]
    EmptyCorpus(String),

    #[error("invalid argument: {0}")]
    InvalidArg(String),

    #[error("token id {token_id} is outside the model vocabulary ({vocab_size} terms)")]
    UnknownToken { token_id: u32, vocab_size: usize },

    #[error("model fit failed for ngram order {order}, {num_topics} topics: {source}")]
    SweepFit {
        order: u8,
        num_topics: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("pipeline stage '{stage}' failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("config {path}, line {line}: {message}")]
    Config {
        path: PathBuf,
        line: usize,
        message: String,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caught before work starts (bad arguments, config
    /// files, missing or malformed inputs). The CLI maps these to exit code
    /// 1; everything else, including any in-flight stage failure, is a
    /// runtime failure with exit code 2.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::MissingColumn { .. }
                | Error::EmptyCorpus(_)
                | Error::InvalidArg(_)
                | Error::Config { .. }
        )
    }
}
