use thiserror::Error;

use crate::arith::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("q = {0} is invalid: q must not be a root of unity (q not in {{0, 1, -1}})")]
    InvalidQ(Rational),

    #[error("operands use different q values ({0} and {1})")]
    QMismatch(Rational, Rational),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("t-leading matrix of the zero operator matrix is undefined")]
    ZeroMatrix,

    #[error("matrix is not in Popov normal form: {0}")]
    NotPopov(String),

    #[error("system not regular (row rank {rank} < {dimension}); remove redundancies first")]
    NotRegular { rank: usize, dimension: usize },

    #[error("t-tail singular (lambda = 0); regularize first")]
    TailSingular,

    #[error("t-head singular (rho = 0); regularize first")]
    HeadSingular,

    #[error("regularization exceeded the iteration cap of {0} steps")]
    IterationLimit(usize),

    #[error("aperiodic denominator must be nonzero and not divisible by t")]
    InvalidAperiodicDenominator,

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Semantic(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn dims(expected: impl ToString, found: impl ToString) -> Self {
        Error::DimensionMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
