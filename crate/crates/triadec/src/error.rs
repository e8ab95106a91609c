use thiserror::Error;

/// Errors surfaced by parsing, decomposition and the numeric oracle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("system is not generic zero-dimensional: chain {chain} has main variables {found} instead of {expected}")]
    NotGenericZeroDimensional {
        chain: String,
        found: String,
        expected: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("root finding did not converge (worst residual {worst:.3e})")]
    Convergence { worst: f64 },

    #[error("numeric initial |{value:.3e}| below tolerance while backsolving {element}; the chain does not specialize well here")]
    InitialVanished { element: String, value: f64 },

    #[error("degenerate system for numeric elimination: {0}")]
    Degenerate(String),

    #[error("candidate tuple count {got} exceeds cap {cap}")]
    TupleCap { got: usize, cap: usize },

    #[error("no stable sample point found after {trials} trials")]
    SampleExhausted { trials: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
