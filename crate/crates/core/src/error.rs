use thiserror::Error;

/// Errors raised by the arithmetic layers and the chain driver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("both gcd inputs are zero")]
    ZeroGcd,
    #[error("element is not invertible modulo {0}")]
    NotInvertible(String),
    #[error("exact division left a nonzero remainder")]
    NotDivisible,
    #[error("polynomial is not monic: {0}")]
    NotMonic(String),
    #[error("operands live over different moduli ({0} vs {1})")]
    ModulusMismatch(String, String),
    #[error("operands live over different base fields")]
    FieldMismatch,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant breached: {0}")]
    InvariantBreach(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
