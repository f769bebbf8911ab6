use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("TooSmall: grid size {0} is below the minimum of 2")]
    TooSmall(usize),

    #[error("LengthMismatch: expected {expected} entries for {field}, found {found}")]
    LengthMismatch {
        field: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("NotAPermutation: {field} row {row} in column {column} is repeated or out of range")]
    NotAPermutation {
        field: &'static str,
        column: usize,
        row: i64,
    },

    #[error("SharedCell: column {column} has both O and X in row {row}")]
    SharedCell { column: usize, row: usize },

    #[error("SyntaxError at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("IllegalMove: {0}")]
    IllegalMove(String),

    #[error("PointNotCorner: ({0}, {1}) is not a point of either generator")]
    PointNotCorner(usize, usize),

    #[error("InvalidDomain: {0}")]
    InvalidDomain(String),

    #[error("NotDivisible: polynomial is not divisible by the V factor (after {peeled} of {requested} divisions)")]
    NotDivisible { peeled: usize, requested: usize },

    #[error("NotAKnot: diagram has {0} components, expected 1")]
    NotAKnot(usize),
}

impl Error {
    /// Internal-consistency alarms, as opposed to bad user input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NotDivisible { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
