use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational literal {literal:?}: {reason}")]
    ParseRational {
        literal: String,
        reason: &'static str,
    },

    #[error("series does not terminate: no upper parameter is a nonpositive integer")]
    NonTerminating,

    #[error("lower parameter {param} vanishes inside the summation range 0..={termination}")]
    LowerParameterVanishes { param: String, termination: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("gamma expression did not reduce to a finite rational: {0}")]
    NotRational(String),

    #[error("certificate denominator vanishes at n={n}, k={k}")]
    CertificateDenominatorZero { n: usize, k: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
