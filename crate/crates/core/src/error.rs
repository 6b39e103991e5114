use thiserror::Error;

/// Errors raised by the validated constructors and the lattice operations.
///
/// All coordinates carried by the variants are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a square array, got {rows} rows with a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("size must be positive")]
    EmptyMatrix,

    #[error("entry ({row}, {col}) = {value} is not in {{-1, 0, 1}}")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },

    #[error("{line} {index}: partial sum {sum} at position {position} is not in {{0, 1}}")]
    PartialSumViolation {
        line: Line,
        index: usize,
        position: usize,
        sum: i64,
    },

    #[error("{line} {index} sums to {sum}, expected 1")]
    TotalSumViolation { line: Line, index: usize, sum: i64 },

    #[error("invalid rank matrix: {0}")]
    InvalidRankMatrix(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid parabolic mask: {0}")]
    InvalidMask(String),

    #[error("monotone triangle bottom row is {found:?}, expected 1..={n}")]
    BadBottomRow { n: usize, found: Vec<usize> },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("resource limit: {what} = {requested} exceeds cap {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("parameters out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("matrix is not a member of ASM^I for I = {mask:?}")]
    NotInSublattice { mask: Vec<usize> },

    #[error("poset is not a lattice: {0}")]
    NotALattice(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("unknown variable {0}")]
    UnknownVariable(String),

    #[error("invalid rational {0:?}")]
    InvalidRational(String),
}

impl Error {
    /// Variant name, for machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::EmptyMatrix => "EmptyMatrix",
            Error::EntryOutOfRange { .. } => "EntryOutOfRange",
            Error::PartialSumViolation { .. } => "PartialSumViolation",
            Error::TotalSumViolation { .. } => "TotalSumViolation",
            Error::InvalidRankMatrix(_) => "InvalidRankMatrix",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::InvalidMask(_) => "InvalidMask",
            Error::BadBottomRow { .. } => "BadBottomRow",
            Error::InvariantViolation(_) => "InvariantViolation",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::ResourceLimit { .. } => "ResourceLimit",
            Error::ParameterOutOfRange(_) => "ParameterOutOfRange",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotInSublattice { .. } => "NotInSublattice",
            Error::NotALattice(_) => "NotALattice",
            Error::InvalidPoset(_) => "InvalidPoset",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::InvalidRational(_) => "InvalidRational",
        }
    }
}

/// Row or column, for error reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
