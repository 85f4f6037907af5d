use thiserror::Error;

use crate::diagram::EdgeLabel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid diagram: {0}")]
    Invalid(String),

    #[error("arc {0} is unlabeled")]
    Unlabeled(u32),

    #[error("edge label {0} not present in diagram")]
    MissingLabel(EdgeLabel),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("deletion leaves an arc with free ends at node {0}")]
    FreeEnds(u32),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("unknown knot `{0}`")]
    UnknownKnot(String),

    #[error("diagram has {crossings} crossings; limit is {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },

    #[error("both-alternating obstruction: the Gauss code is a double run, no partition exists")]
    BothAlternating,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("n = {n} is too large for exhaustive enumeration (max {max})")]
    TooLarge { n: usize, max: usize },

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
