//! Exact rational scalars, dense matrices and canonical subspaces.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use scalar::{common_denominator, ParseScalarError, Scalar};
pub use subspace::Subspace;

/// Coordinate vector.
pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Integer vector helper, mostly for tests and catalog literals.
pub fn int_vector(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Scalar::from_int(x)).collect()
}

/// Coefficients `c` with `sum_i c_i basis[i] = x`, if `x` lies in the span.
/// The basis vectors must be linearly independent.
pub fn coordinates_in(basis: &[Vector], x: &[Scalar]) -> Option<Vector> {
    let n = x.len();
    let k = basis.len();
    let aug = Matrix::from_fn(n, k + 1, |i, j| if j < k { basis[j][i].clone() } else { x[i].clone() });
    let r = aug.rref();
    if r.pivots.last() == Some(&k) {
        return None;
    }
    debug_assert_eq!(r.rank, k, "basis vectors must be independent");
    let mut c = zero_vector(k);
    for (row, &p) in r.pivots.iter().enumerate() {
        c[p] = r.matrix[(row, k)].clone();
    }
    Some(c)
}
