use thiserror::Error;

/// Everything that can go wrong while building or querying the combinatorial objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} at token `{token}`: {reason}")]
    Parse {
        what: &'static str,
        token: String,
        reason: String,
    },
    #[error("diagram is not a connected tree: {0}")]
    NotATree(String),
    #[error("unsupported Dynkin diagram: {0}")]
    UnsupportedDiagram(String),
    #[error("vertex labels must be exactly 1..{rank}; missing {missing}")]
    VertexGap { rank: usize, missing: usize },
    #[error("letter {letter} is out of range 1..{rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("word is not a reduced expression of the longest element: {0}")]
    NotReducedW0(String),
    #[error("vertex {0} is not a sink")]
    NotASink(usize),
    #[error(
        "word is not adapted to the quiver (letter {letter} at position {position} is not a sink)"
    )]
    NotAdapted { position: usize, letter: usize },
    #[error("operation requires a type A diagram labelled 1-2-..-n")]
    NotTypeA,
    #[error("no position of the word carries letter {0}")]
    LetterAbsent(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("maximizing antichains of type {type_index} have no unique maximum")]
    AmbiguousMaximum { type_index: usize },
    #[error("quiver does not satisfy condition (L): {0}")]
    ConditionLFails(String),
    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
