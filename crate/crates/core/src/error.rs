use thiserror::Error;

/// Errors produced by the algebra, realization and simulation layers.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("gcd/lcm of two zero polynomials is undefined")]
    BothZero,

    #[error("invalid MCARMA order: p={p}, q={q} (need 0 <= q < p)")]
    InvalidOrder { p: usize, q: usize },

    #[error("transfer function is identically zero")]
    ZeroTransferFunction,

    #[error("all beta blocks vanish; no nonzero moving-average polynomial can be recovered")]
    DegenerateTransferFunction,

    #[error("transfer function is not strictly proper")]
    NotStrictlyProper,

    #[error("state matrix is not asymptotically stable")]
    Unstable,

    #[error("evaluation point omega={0} is a pole of the transfer function")]
    PoleOnEvaluationAxis(f64),

    #[error("invalid driver: {0}")]
    InvalidDriver(String),

    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
