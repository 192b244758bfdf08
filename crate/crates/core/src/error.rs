use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants split into two families: malformed input ([`Error::is_parse`])
/// and well-formed input that violates a mathematical precondition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),

    #[error("edge `{edge}` has dangling endpoint `{vertex}`")]
    DanglingEndpoint { edge: String, vertex: String },

    #[error("graph has no vertices")]
    EmptyVertexSet,

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown identifier `{0}`")]
    UnknownId(String),

    #[error("inadmissible word: {0}")]
    InadmissibleWord(String),

    #[error("word is not a loop: {0}")]
    NotALoop(String),

    #[error("expected a finite path, got vertex `{0}`")]
    VertexInput(String),

    #[error("operands live over different graphs")]
    GraphMismatch,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("order {order} outside supported range {min}..={max}")]
    OrderOutOfBounds {
        order: usize,
        min: usize,
        max: usize,
    },

    #[error("order {order} below minimum {min}")]
    OrderTooSmall { order: usize, min: usize },

    #[error("order must be even, got {0}")]
    OddOrder(usize),

    #[error("partition is not below the upper bound in the refinement order")]
    NotComparable,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("vertex `{0}` listed more than once")]
    RepeatedVertex(String),

    #[error("word length {len} exceeds truncation margin {margin}")]
    TruncationExceeded { len: usize, margin: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for malformed input (syntax, JSON, I/O, an invalid graph
    /// document), false for domain errors.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Json(_)
                | Error::Io(_)
                | Error::DuplicateId(_)
                | Error::DanglingEndpoint { .. }
                | Error::EmptyVertexSet
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
