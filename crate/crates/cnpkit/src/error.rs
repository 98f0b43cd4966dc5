use thiserror::Error;

/// Errors shared across the crate.
///
/// Guard-style variants (size limits, node ceilings) are distinguished from
/// input errors so callers such as the CLI can map them to distinct exit
/// codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index error: {0}")]
    Index(String),

    #[error("duplication insertion point {p} lies inside the copied span [{i}, {j}]")]
    InsideCopy { i: usize, j: usize, p: usize },

    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("event {index} in sequence: {source}")]
    EventInSequence {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    /// The solver's node ceiling was hit before the search space up to the
    /// requested budget could be exhausted.
    #[error("search budget too large: node ceiling of {ceiling} expansions exceeded")]
    BudgetTooLarge { ceiling: u64 },

    #[error("invalid sub-vector: {0}")]
    InvalidSubvector(String),

    #[error("size guard exceeded: {0}")]
    SizeGuardExceeded(String),

    #[error("element {0:?} is not contained in any set")]
    UncoveredElement(String),

    #[error("not an exact cover: {0}")]
    NotExactCover(String),

    #[error("event sequence does not reach the target: {0}")]
    NotASolution(String),

    #[error("event sequence contains a duplication")]
    HasDuplication,

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("set too large: {0}")]
    SetTooLarge(String),

    #[error("not a cover: {0}")]
    NotACover(String),

    #[error("improper coloring: {0}")]
    ImproperColoring(String),

    #[error("too many sets: {got} (exhaustive cover search is limited to {limit})")]
    TooManySets { got: usize, limit: usize },

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for guard/budget exhaustion errors (CLI exit code 3); everything
    /// else is treated as a usage or format error (exit code 2).
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::BudgetTooLarge { .. }
                | Error::SizeGuardExceeded(_)
                | Error::SetTooLarge(_)
                | Error::TooManySets { .. }
                | Error::TooLarge(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
