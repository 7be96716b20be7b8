use thiserror::Error;

/// Errors produced by the algebra kernels, fixture loading and report emission.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is not in the span of the basis")]
    NotInSpan,

    #[error("basis element {0} has a zero Gram entry")]
    SingularGram(usize),

    #[error("basis elements {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),

    #[error("third argument does not commute with the first two")]
    NotCentral,

    #[error("bracket is not a scalar multiple of operator {0}")]
    NotProportional(usize),

    #[error("unknown z-factorization variant {0} (expected 1..=4)")]
    UnknownVariant(u8),

    #[error("generator count mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("index {index} out of range (must be < {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("{0}")]
    Range(String),

    #[error("invalid rational {0:?} (expected \"p/q\")")]
    ParseRational(String),

    #[error("invalid input: {0}")]
    Parse(String),

    #[error("fixture {path}: {message}")]
    FixtureParse { path: String, message: String },

    #[error("fixture {path}: expected {expected} rows, found {found}")]
    FixtureRowCount {
        path: String,
        expected: usize,
        found: usize,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
