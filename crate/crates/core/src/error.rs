use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {0} is out of range (supported: 2..={max})", max = crate::gallery::Rank::MAX)]
    RankOutOfRange(usize),
    #[error("column {column} is not strictly increasing: {entries:?}")]
    NonIncreasingColumn { column: usize, entries: Vec<usize> },
    #[error("letter {letter} is outside the alphabet 1..={n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("column {column} has length {len}, galleries allow at most {max}")]
    ColumnTooLong { column: usize, len: usize, max: usize },
    #[error("column {column} is empty")]
    EmptyColumn { column: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("simple root index {i} out of range 1..={max}")]
    IndexOutOfRange { i: usize, max: usize },
    #[error("counts {0:?} are not weakly decreasing")]
    NotDominant(Vec<i64>),
    #[error("invalid shape {shape:?} for rank {n}")]
    ShapeInvalid { shape: Vec<usize>, n: usize },
    #[error("crystal graph is not connected")]
    NotConnected,
    #[error("root operator would break column {column}")]
    BrokenColumn { column: usize },
    #[error("invalid MV label: {0}")]
    InvalidLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RankOutOfRange(_) => "RankOutOfRange",
            Error::NonIncreasingColumn { .. } => "NonIncreasingColumn",
            Error::LetterOutOfRange { .. } => "LetterOutOfRange",
            Error::ColumnTooLong { .. } => "ColumnTooLong",
            Error::EmptyColumn { .. } => "EmptyColumn",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotDominant(_) => "NotDominant",
            Error::ShapeInvalid { .. } => "ShapeInvalid",
            Error::NotConnected => "NotConnected",
            Error::BrokenColumn { .. } => "BrokenColumn",
            Error::InvalidLabel(_) => "InvalidLabel",
            Error::Parse(_) => "ParseError",
        }
    }
}
