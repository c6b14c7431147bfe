use thiserror::Error;

use crate::shapes::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("cell ({}, {}) is not in the diagram", .0.row, .0.col)]
    CellOutOfShape(Cell),

    #[error("operation requires a partition shape, got column lengths {0:?}")]
    NotPartitionShape(Vec<usize>),

    #[error("filling is not column strict at cell ({}, {})", .0.row, .0.col)]
    NotColumnStrict(Cell),

    #[error("entry {entry} at cell ({}, {}) is outside 1..={n}", .cell.row, .cell.col)]
    EntryOutOfRange { cell: Cell, entry: usize, n: usize },

    #[error("rows must be left-justified with weakly decreasing lengths")]
    RaggedRows,

    #[error("polynomials have {left} and {right} variables")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("negative argument {0}")]
    NegativeArgument(i64),

    #[error("partition {parts:?} does not fit in a {rows}x{cols} box")]
    BoxViolation { parts: Vec<usize>, rows: usize, cols: usize },

    #[error("tuple {0:?} is not strictly decreasing within the box")]
    NonStrictTuple(Vec<usize>),

    #[error("column tuple {0:?} is not strictly increasing")]
    NonStrictColumn(Vec<usize>),

    #[error("index {index} out of range: {reason}")]
    IndexOutOfRange { index: usize, reason: &'static str },

    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidPattern(String),

    #[error("filling is not semistandard")]
    NotSemistandard,

    #[error("invalid overlay at ({i},{j}): {reason}")]
    InvalidOverlay { i: usize, j: usize, reason: String },

    #[error("search budget of {0} states exceeded")]
    SearchBudgetExceeded(usize),

    #[error("|lambda| = {size} is not divisible by n = {n}")]
    DivisibilityViolation { size: usize, n: usize },

    #[error("truncation did not stabilise before k = {0}")]
    StabilizationCapExceeded(usize),

    #[error("unsupported format {0:?}")]
    UnsupportedFormat(String),

    #[error("shape {0:?} is not of the form lambda + k*theta")]
    NotThetaShifted(Vec<usize>),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
