use std::fmt;

use thiserror::Error;

/// Which line of a square repeated a symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("not latin: {line} {index} repeats symbol {symbol}")]
    NotLatin { line: Line, index: usize, symbol: usize },

    #[error("symbol {value} at ({row}, {col}) is outside 0..{order}")]
    BadSymbol { row: usize, col: usize, value: usize, order: usize },

    #[error("grid shape does not match order {order}: {detail}")]
    BadShape { order: usize, detail: String },

    #[error("not a permutation of 0..{order}: {detail}")]
    BadPermutation { order: usize, detail: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("{0}")]
    Domain(String),

    #[error("suitable diagonals are only defined for even order, got {0}")]
    OddOrder(usize),

    #[error("search node budget of {0} exceeded")]
    BudgetExceeded(u64),

    #[error("the search engine supports orders up to {max}, got {order}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("invalid search constraints: {0}")]
    InvalidConstraints(String),

    #[error("invalid diagonal: {0}")]
    InvalidDiagonal(String),

    #[error("square does not have the 3x3 block structure: {0}")]
    NotBlockSquare(String),

    #[error("block hit counts violate the row/column sum identities: {0}")]
    SumViolation(String),

    #[error("isotopism does not fix the square")]
    NotAutotopism,

    #[error("classification report is partial ({0} cells unknown)")]
    PartialReport(usize),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
