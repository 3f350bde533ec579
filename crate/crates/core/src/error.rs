use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not an odd prime below 2^32")]
    InvalidPrime(u64),
    #[error("p = {0} is not 1 mod 4, so -1 has no square root")]
    NoSqrtMinusOne(u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {source}")]
    Fixture { path: PathBuf, source: Box<Error> },
    #[error("checksum mismatch for {0}")]
    Checksum(PathBuf),
    #[error("{0} is not listed in the data manifest")]
    Unlisted(PathBuf),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("data error: {0}")]
    Data(String),
    #[error("insufficient samples: {have} rows for {need} required")]
    InsufficientSamples { have: usize, need: usize },
    #[error("rank results disagree across primes/seeds: {0}")]
    Disagreement(String),
    #[error("{cols} columns exceed the ceiling of {limit} (pass --force to run anyway)")]
    TooManyColumns { cols: usize, limit: usize },
    #[error("incompatible inputs: {0}")]
    Incompatible(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn in_file(self, path: impl Into<PathBuf>) -> Error {
        match self {
            e @ (Error::Fixture { .. } | Error::Io { .. } | Error::Checksum(_) | Error::Unlisted(_)) => e,
            e => Error::Fixture { path: path.into(), source: Box::new(e) },
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, msg: msg.into() }
    }

    /// True for errors caused by inputs (files, flags) rather than by a
    /// failed mathematical check.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Disagreement(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
