use thiserror::Error;

use crate::ncpartition::{Arc, Violation};

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid arc set: {0}")]
    Invalid(Violation),

    #[error("{what} of size {requested} exceeds the configured limit of {limit}")]
    Ceiling {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("integer overflow computing {0}")]
    Overflow(String),

    #[error("ground sets differ: {left} vs {right}")]
    MismatchedN { left: usize, right: usize },

    #[error("parse error at token {position} ({token:?}): {message}")]
    Parse {
        token: String,
        position: usize,
        message: String,
    },

    #[error("arc {0} is compared with itself")]
    EqualArcs(Arc),

    #[error("arc {arc} is out of range for n = {n}")]
    ArcOutOfRange { arc: Arc, n: usize },

    #[error("word is not a partial Coxeter word: {0} repeats")]
    NotPartialCoxeter(String),

    #[error("{0} is not a source of the word's orientation")]
    NotSource(String),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not 2-cliquish with the given independent set: {0}")]
    NotTwoCliquish(String),

    #[error("graph is not skeletal: edge {0}-{1} can be removed")]
    NotSkeletal(String, String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("complement search found {0} minimizers; expected exactly one")]
    NonUniqueComplement(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
