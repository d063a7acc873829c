use thiserror::Error;

use crate::exactalg::Field;

/// Errors raised by the scalar, polynomial, matrix and Lie-algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not a prime in [2, 2^31]")]
    NotPrime(u64),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("size mismatch: {left:?} vs {right:?}")]
    SizeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is singular")]
    Singular,
    #[error("group element is not in the mirabolic subgroup")]
    NotInP,
    #[error("algebra element is not in the mirabolic Lie algebra")]
    NotInLieP,
    #[error("functional is not in the p-bar normal form (nonzero last column)")]
    NotPBar,
    #[error("Lie algebra rank must be at least 1")]
    EmptyAlgebra,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
