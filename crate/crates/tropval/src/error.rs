//! Error type shared by the whole crate.
//!
//! Two families matter to callers: domain errors (a well-formed request
//! hit a mathematical precondition, e.g. inverting `-inf`) and syntax
//! errors (the input text itself is malformed). The CLI maps them to
//! exit codes 1 and 2 respectively.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bottom (-inf) has no tropical inverse")]
    InvertBottom,

    #[error("{op} is undefined for the zero polynomial")]
    ZeroPolynomial { op: &'static str },

    #[error("denominator is the zero polynomial")]
    ZeroDenominator,

    #[error("the zero fraction has no inverse")]
    InvertZeroFraction,

    #[error("division by tropical zero: denominator evaluates to -inf")]
    DivisionByBottom,

    #[error("invalid valuation parameter: {reason}")]
    InvalidParameter { reason: String },

    #[error("valuations of different kind or carrier cannot be compared")]
    KindMismatch,

    #[error("classical valuations on qmax(T) are not classified")]
    ClassicalNotClassified,

    #[error("{residue} is not a unit modulo {modulus}")]
    NotAUnit { residue: u64, modulus: u64 },

    #[error("carrier size {size} exceeds the isomorphism-search limit {max}")]
    CarrierTooLarge { size: usize, max: usize },

    #[error("exponent {0} exceeds the supported maximum {1}")]
    ExponentTooLarge(u64, u64),

    #[error("invalid hyperstructure table: {0}")]
    BadTable(String),

    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
}

impl Error {
    pub fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }

    /// CLI/FFI exit status: 2 for syntax errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
