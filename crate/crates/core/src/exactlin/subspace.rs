use std::fmt;

use serde::{Deserialize, Serialize};

use super::{is_zero_vector, unit_vector, LinalgError, Matrix, Scalar, Vector};

/// Linear subspace of `Q^n` stored by its reduced row echelon basis.
///
/// Equality of values is equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::zeros(0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::identity(n),
            pivots: (0..n).collect(),
        }
    }

    pub fn span(vectors: &[Vector], n: usize) -> Result<Self, LinalgError> {
        let m = Matrix::from_rows(vectors, n)?;
        Ok(Self::row_space(&m))
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        let r = m.rref();
        Subspace {
            ambient_dim: m.cols(),
            basis: r.matrix,
            pivots: r.pivots,
        }
    }

    /// Span of coordinate vectors `e_i` for the given indices.
    pub fn coordinate(indices: &[usize], n: usize) -> Self {
        let vs: Vec<Vector> = indices.iter().map(|&i| unit_vector(n, i)).collect();
        Self::span(&vs, n).expect("coordinate indices in range")
    }

    /// Null space of `m`, inside `Q^{cols}`.
    pub fn kernel(m: &Matrix) -> Self {
        let vs = m.kernel_vectors();
        Self::span(&vs, m.cols()).expect("kernel vectors have matching length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis matrix (RREF, no zero rows).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection, computed as `Ann(Ann a + Ann b)`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let dual = self.annihilator().sum(&other.annihilator())?;
        Ok(dual.annihilator())
    }

    /// Functionals vanishing on the subspace, as a subspace of the dual
    /// coordinate space.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient_dim);
        }
        Subspace::kernel(&self.basis)
    }

    /// Coordinates of `v` relative to the canonical basis, if `v` lies in the
    /// subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, row) in coords.iter().zip(0..self.dim()) {
            super::axpy(&mut rest, &-c, self.basis.row(row));
        }
        is_zero_vector(&rest).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && other.dim() <= self.dim()
            && (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    /// Deterministic complement of `self` inside `within`: canonical basis
    /// vectors of `within` are taken greedily in order whenever they are
    /// independent of everything chosen so far.
    pub fn complement(&self, within: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(within)?;
        if !within.contains(self) {
            return Err(LinalgError::NotContained);
        }
        let mut acc = self.clone();
        let mut chosen = Vec::new();
        for row in within.basis_vectors() {
            if acc.dim() == within.dim() {
                break;
            }
            if !acc.contains_vector(&row) {
                acc = acc.sum(&Subspace::span(std::slice::from_ref(&row), self.ambient_dim)?)?;
                chosen.push(row);
            }
        }
        Subspace::span(&chosen, self.ambient_dim)
    }

    /// Surjection `Q^n -> Q^{n-k}` with kernel exactly `self`; one row per
    /// non-pivot coordinate `c`, namely `e_c - sum_i basis_i[c] e_{pivot_i}`.
    pub fn quotient_map(&self) -> Matrix {
        let n = self.ambient_dim;
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut m = Matrix::zeros(free.len(), n);
        for (r, &c) in free.iter().enumerate() {
            m[(r, c)] = Scalar::one();
            for (i, &p) in self.pivots.iter().enumerate() {
                let x = &self.basis[(i, c)];
                if !x.is_zero() {
                    m[(r, p)] = -x;
                }
            }
        }
        m
    }

    /// Image of the subspace under a linear map given by a matrix acting on
    /// column vectors.
    pub fn image(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        if m.cols() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: m.cols(),
            });
        }
        let vs: Vec<Vector> = self
            .basis_vectors()
            .iter()
            .map(|v| m.apply(v))
            .collect::<Result<_, _>>()?;
        Subspace::span(&vs, m.rows())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}: {:?})", self.dim(), self.ambient_dim, self.basis)
    }
}
