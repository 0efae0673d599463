use thiserror::Error;

/// Errors raised by construction, verification and simulation routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("modulus q = {0} must be an even integer >= 2")]
    OddModulus(u32),
    #[error("at least one row variable is required (n = 0)")]
    NoRowVariables,
    #[error("m + n = {0} exceeds the supported maximum of {max}", max = crate::MAX_VARIABLES)]
    TooManyVariables(usize),
    #[error("{name} has length {got}, expected {expected}")]
    LengthMismatch {
        name: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("variable {var} is out of range")]
    VariableOutOfRange { var: String },
    #[error("quadratic term pairs {0} with itself")]
    DegenerateQuadratic(String),
    #[error("restriction index {index} is outside 1..={m}")]
    RestrictionOutOfRange { index: usize, m: usize },
    #[error("restriction index {0} appears more than once")]
    RestrictionDuplicate(usize),
    #[error("restriction has {p} indices but only {limit} are allowed")]
    RestrictionTooLong { p: usize, limit: usize },
    #[error("row index {g} out of range (rows: {rows})")]
    RowOutOfRange { g: usize, rows: usize },
    #[error("column index {i} out of range (cols: {cols})")]
    ColumnOutOfRange { i: usize, cols: usize },
    #[error("exponent {exp} at ({row}, {col}) is not below q = {q}")]
    ExponentOutOfRange {
        row: usize,
        col: usize,
        exp: u32,
        q: u32,
    },
    #[error("shift {shift} out of range for length {len}")]
    ShiftOutOfRange { shift: i64, len: usize },
    #[error("sequence {seq} has a non-unimodular entry at index {index}")]
    NotPolyphase { seq: usize, index: usize },
    #[error("{0}")]
    InvalidParameters(String),
    #[error("matrix is singular: pivot {index} has magnitude {magnitude:e}")]
    Singular { index: usize, magnitude: f64 },
    #[error("rows carry unequal energy (min {min}, max {max})")]
    UnequalRowEnergy { min: usize, max: usize },
    #[error("simulation produced a non-finite value")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
