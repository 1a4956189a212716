use thiserror::Error;

use crate::prefixcode::{Codeword, ExactRational};
use crate::structure::PointId;

/// Errors raised by the structure, coloring and prefix-code operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 2, got {0}")]
    InvalidOrder(u32),

    #[error("point {0} is not part of the order-{1} structure")]
    UnknownPoint(PointId, u32),

    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),

    #[error("edge ({u}, {v}) references a vertex outside 0..{vertex_count}")]
    EdgeOutOfRange { u: usize, v: usize, vertex_count: usize },

    #[error("coloring covers {got} vertices but the graph has {expected}")]
    PartialColoring { expected: usize, got: usize },

    #[error("color indices are not contiguous from 0: index {0} is unused")]
    NonContiguousPalette(u32),

    #[error("vertex order is not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("graph has {vertices} vertices, exact search is limited to {limit}")]
    GraphTooLarge { vertices: usize, limit: usize },

    #[error("the fixture coloring exists only for order 4, got {0}")]
    NoFixture(u32),

    #[error("codeword length at position {0} must be positive")]
    ZeroLength(usize),

    #[error("radix must be at least 2, got {0}")]
    InvalidRadix(u32),

    #[error("codeword must be a non-empty string of '0'/'1', got {0:?}")]
    BadCodeword(String),

    #[error("codeword {prefix} is a prefix of {word}")]
    PrefixViolation { prefix: Codeword, word: Codeword },

    #[error("codeword {0} appears more than once")]
    DuplicateWord(Codeword),

    #[error("KraftViolation {0}")]
    KraftViolation(ExactRational),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
