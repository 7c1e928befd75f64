use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a tuple needs at least one coordinate")]
    EmptyTuple,

    #[error("coordinate {index} is {value}, but every coordinate must be at least 1")]
    NonPositiveCoordinate { index: usize, value: String },

    #[error("incompatible operands: dimension {left} vs dimension {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("coordinate overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{0} is not an atom: no coordinate equals 1")]
    NotAtom(String),

    #[error("a word needs at least one letter")]
    EmptyWord,

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid P2 letter: {0}")]
    InvalidLetter(String),

    #[error("resource guard exceeded for {target}: more than {bound} {what}")]
    GuardExceeded {
        target: String,
        bound: usize,
        what: &'static str,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
