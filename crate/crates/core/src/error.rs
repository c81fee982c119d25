use thiserror::Error;

use crate::triangle::TriangleKind;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series constant term must be the constant polynomial 1")]
    NonUnitConstantTerm,

    #[error("expected a {expected:?} table, got {found:?}")]
    WrongTableKind {
        expected: TriangleKind,
        found: TriangleKind,
    },

    #[error("table covers n <= {max_n} but n = {needed} was requested")]
    InsufficientTable { max_n: usize, needed: usize },

    #[error("matrix is not unit lower-Hessenberg at entry ({row}, {col})")]
    NotHessenberg { row: usize, col: usize },

    #[error("polynomial is not divisible by x^{0}")]
    NotDivisible(usize),

    #[error("denominator {modulus:e} is too close to zero at t = {t}")]
    NearPole { t: String, modulus: f64 },

    #[error("Newton iteration from seed {seed} did not converge")]
    NoConvergence { seed: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
