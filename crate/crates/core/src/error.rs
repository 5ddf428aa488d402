use thiserror::Error;

/// Errors raised by the algebraic routines.
///
/// `NonDivisible` and `NonIntegral` indicate an internal inconsistency
/// rather than bad input: every character value is an integer polynomial
/// and every `G`-value is divisible by the stated power of `(q - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial {poly} is not divisible by (q-1)^{power}")]
    NonDivisible { poly: String, power: usize },

    #[error("character value {0} has non-integer coefficients")]
    NonIntegral(String),

    #[error("pfaffian of odd-sized matrix ({0}x{0})")]
    OddSize(usize),

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },

    #[error("{outer}/{inner} is not a generalized double strip")]
    NotGds { outer: String, inner: String },

    #[error("bad shape: {0}")]
    BadShape(String),

    #[error("weights differ: |{left}| = {left_weight}, |{right}| = {right_weight}")]
    WeightMismatch {
        left: String,
        left_weight: u32,
        right: String,
        right_weight: u32,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("method {method} requires {requirement}")]
    Domain {
        method: &'static str,
        requirement: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
