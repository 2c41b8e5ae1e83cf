//! Lie algebras given by structure constants.

mod algebra;
mod constructions;

pub use algebra::{JacobiReport, JacobiViolation, LieAlgebra, SeriesReport};
pub use constructions::{abelian, direct_sum, filiform_f4, heisenberg};

use crate::exactlin::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("invalid basis name {0:?}")]
    InvalidName(String),
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error("bracket [{0}, {1}] given more than once")]
    DuplicateBracket(String, String),
    #[error("bracket [{0}, {0}] must vanish")]
    SelfBracket(String),
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Basis names are identifiers: a letter or underscore followed by letters,
/// digits or underscores.
pub fn is_valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
