use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a single Tamil letter: {0:?}")]
    NotALetter(String),
    #[error("not a Tamil word (contains non-letter clusters): {0:?}")]
    NotAWord(String),
    #[error("expected a mei letter, got {0:?}")]
    ExpectedMei(String),
    #[error("expected an uyir letter, got {0:?}")]
    ExpectedUyir(String),
    #[error("word must have at least one letter")]
    EmptyWord,
    #[error("edit distance must be at least 1, got {0}")]
    EditDistanceTooSmall(usize),
    #[error("edit distance {ed} out of range for a {len}-letter word")]
    EditDistanceOutOfRange { ed: usize, len: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("could not start worker pool: {0}")]
    WorkerPool(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Error {
        Error::Parse { line, message: message.into() }
    }
}
