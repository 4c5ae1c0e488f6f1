use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("at {path}: {message}")]
    Shape { path: String, message: String },
    #[error("at {path}: {source}")]
    Semantic {
        path: String,
        source: structa_core::Error,
    },
    #[error("unknown derive operation {0:?}; see `structa derive --help`")]
    UnknownOp(String),
    #[error("operation {op} does not apply to a {kind} document")]
    KindMismatch { op: String, kind: String },
    #[error("operation {op}: {message}")]
    BadArgs { op: String, message: String },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("document too large: size {size}, bound {bound} (raise with --max-size)")]
    TooLarge { size: usize, bound: usize },
    #[error(transparent)]
    Core(#[from] structa_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn semantic(path: &str, source: structa_core::Error) -> CliError {
        CliError::Semantic {
            path: path.to_string(),
            source,
        }
    }
}
