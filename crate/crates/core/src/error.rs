use thiserror::Error;

use crate::exact::ExactError;
use crate::report::Violation;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("{what}: expected dimension {expected}, found {found}")]
    Dimension {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("the field has characteristic 2")]
    CharacteristicTwo,
    #[error("{0} is not a primitive {1}-th root of unity")]
    NotPrimitiveRoot(String, u32),
    #[error("the parameter `a` must be nonzero")]
    ZeroParameter,
    #[error("invalid two-cocycle ({} violations)", .0.len())]
    InvalidCocycle(Vec<Violation>),
    #[error("not a comodule algebra ({} violations)", .0.len())]
    InvalidComoduleAlgebra(Vec<Violation>),
    #[error("the bilinear form is not convolution-invertible")]
    NotInvertible,
    #[error("the coalgebra matrix is singular over the fraction field")]
    SingularCoalgebraMatrix,
    #[error("host Hopf algebras differ")]
    HostMismatch,
    #[error("degree {degree} exceeds the limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("{rows} rows exceed the cap {cap}")]
    CapExceeded { rows: usize, cap: usize },
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("grading violation: {0}")]
    GradingViolation(String),
    #[error("action is not by algebra automorphisms: {0}")]
    NotAutomorphism(String),
    #[error("presentation does not reduce into the given basis: {0}")]
    Presentation(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("malformed file: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
