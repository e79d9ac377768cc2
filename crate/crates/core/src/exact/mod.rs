//! Exact coefficient arithmetic (rationals, prime fields, cyclotomic fields,
//! polynomials and rational functions) and exact linear algebra.

mod cyclo;
mod linalg;
mod poly;
mod scalar;

pub use cyclo::{cyclotomic_polynomial, CycloField, Cyclotomic};
pub use linalg::{kernel_basis, rank, reduced_echelon, solve_linear, ExactMatrix};
pub use poly::{MPoly, Monomial, RatFunc, Var};
pub use scalar::{cyclotomic_field, Field, ModP, Scalar};


use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible coefficient fields: {0} and {1}")]
    IncompatibleFields(String, String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse `{input}` at column {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },
}
