use thiserror::Error;

/// Errors produced by path parsing, lattice operations, tableau validation
/// and the bijections.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid step {found:?} at index {index}: expected 'u' or 'd'")]
    InvalidStep { index: usize, found: char },

    #[error("invalid height profile at index {index}: consecutive heights must differ by exactly 1")]
    InvalidHeights { index: usize },

    #[error("invalid k-encoding: {0}")]
    InvalidEncoding(String),

    #[error("paths have different lengths ({left} and {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("paths are not comparable")]
    Incomparable,

    #[error("{0} is not a Dyck path")]
    NotDyck(String),

    #[error("{0} is not a Dyck prefix")]
    NotDyckPrefix(String),

    #[error("{0} is not a Dyck suffix")]
    NotDyckSuffix(String),

    #[error("path {0} must start with a down step")]
    MustStartWithDown(String),

    #[error("invalid multichain: {0}")]
    InvalidMultichain(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("cell ({i}, {j}) is outside the staircase of size {n}")]
    CellOutOfRange { n: usize, i: i64, j: i64 },

    #[error("point ({x}, {y}) does not correspond to a cell of the staircase of size {n}")]
    PointOutOfRange { n: usize, x: i64, y: i64 },

    #[error("bound violated: {0}")]
    BoundViolation(String),

    #[error("{what} of size {size} exceeds the limit {limit}")]
    LimitExceeded { what: &'static str, size: usize, limit: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
