use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown ground element `{0}`")]
    UnknownElement(String),

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("label collision in direct sum: `{0}`")]
    LabelCollision(String),

    #[error("{what} is limited to {limit}, got {actual}")]
    GateExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("operation undefined: {0}")]
    Undefined(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not 4-regular: vertex `{vertex}` has degree {degree}")]
    NotFourRegular { vertex: String, degree: usize },

    #[error("invalid transition at vertex `{0}`")]
    InvalidTransition(String),

    #[error("set system is improper (empty family)")]
    Improper,

    #[error("set system does not encode a looped simple graph")]
    NotGraphic,

    #[error("maximal sets are not equicardinal, so they do not form a matroid")]
    NotMatroid,

    #[error("inconsistent nullity oracle: {0}")]
    InconsistentOracle(String),

    #[error("structural invariant failed: {0}")]
    Invariant(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn gate(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::GateExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
