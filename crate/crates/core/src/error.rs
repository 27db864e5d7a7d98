use std::fmt;

use thiserror::Error;

use crate::report::AxiomReport;

/// A parse failure with the 1-based line (and column, when known) it occurred on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: Option<usize>,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: Option<usize>, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.column {
            Some(c) => write!(f, "line {}, column {}: {}", self.line, c, self.message),
            None => write!(f, "line {}: {}", self.line, self.message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("closure exceeded the element budget of {budget}")]
    BudgetExceeded { budget: usize },

    #[error("order {order} exceeds the bound {bound}")]
    OrderBound { order: usize, bound: usize },

    #[error("malformed table: {0}")]
    Malformed(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("not a normal subgroup: {0}")]
    NotNormal(String),

    #[error("not a right transversal: {0}")]
    NotTransversal(String),

    #[error("not a right subgyrogroup: {0}")]
    NotRightSubgyrogroup(String),

    #[error("not a homomorphism:\n{0}")]
    NotHomomorphism(AxiomReport),

    #[error("axiom check failed:\n{0}")]
    Axioms(AxiomReport),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A computed structure contradicts a property that must hold for valid
    /// inputs.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
