use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("variable {0} has no assigned matrix")]
    Unassigned(String),

    #[error("polynomial is not multilinear in {0}")]
    NotMultilinear(String),

    #[error("symbolic expansion would produce {estimated} terms (cap {cap})")]
    TermCap { estimated: u128, cap: u128 },

    #[error("estimated work of {estimated} monomial evaluations exceeds the budget of {budget}")]
    Budget { estimated: u128, budget: u128 },

    #[error("matrix is singular")]
    Singular,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
