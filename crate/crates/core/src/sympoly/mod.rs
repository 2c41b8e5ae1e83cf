//! Exact multivariate polynomials over the rationals, polynomial matrices
//! with Pfaffians and determinants, and real quadratic-form classification.

mod matrix;
mod poly;
mod quadratic;

pub use matrix::SymMatrix;
pub use poly::{variables, Monomial, Poly};
pub use quadratic::{
    inertia, quadratic_definiteness, quadratic_form_matrix, semidefinite_zero_set, Definiteness,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials use different variables: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("expected {expected} values, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("Pfaffian of an odd-size matrix")]
    OddDimension,
    #[error("expected a homogeneous quadratic form")]
    NotQuadraticForm,
}
