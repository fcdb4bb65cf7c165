use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    /// A malformed line in one of the text asset formats. `line` is 1-based.
    #[error("{path}:{line}: {message}")]
    Format {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("duplicate word `{0}` in embedding file")]
    DuplicateWord(String),

    #[error("`{0}` is not in the embedding vocabulary")]
    OutOfVocabulary(String),

    #[error("`{0}` is not in the phonetic lexicon")]
    OutOfLexicon(String),

    #[error("`{word}` has no {kind} tag")]
    MissingTag { word: String, kind: &'static str },

    #[error("vector has zero norm")]
    DegenerateVector,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("knowledge graph: {0}")]
    Structure(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("seed `{word}` rejected: {reason}")]
    InvalidSeed { word: String, reason: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(
        path: impl Into<PathBuf>,
        line: usize,
        message: impl Into<String>,
    ) -> Self {
        Error::Format {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}
