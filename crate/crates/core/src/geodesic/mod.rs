//! Metric notions: geodesic elements, admissibility, totally geodesic
//! subalgebras and orthonormal geodesic bases.

use serde::Serialize;

use crate::exactlin::{dot, is_zero_vector, LinalgError, Matrix, Scalar, Subspace, Vector};
use crate::liealg::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeodesicError {
    #[error("gram matrix is {rows}x{cols}, algebra has dimension {n}")]
    GramShape { rows: usize, cols: usize, n: usize },
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is not positive definite (leading minors {minors:?})")]
    NotPositiveDefinite { minors: Vec<String> },
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("vector has length {found}, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("vectors do not form a basis")]
    NotBasis,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A Lie algebra with an inner product given by its Gram matrix in the
/// structure basis.
#[derive(Debug, Clone)]
pub struct MetricLieAlgebra {
    algebra: LieAlgebra,
    gram: Matrix,
}

impl MetricLieAlgebra {
    pub fn new(algebra: LieAlgebra, gram: Matrix) -> Result<Self, GeodesicError> {
        let n = algebra.dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(GeodesicError::GramShape { rows: gram.rows(), cols: gram.cols(), n });
        }
        if !gram.is_symmetric() {
            return Err(GeodesicError::NotSymmetric);
        }
        let minors = gram.leading_principal_minors()?;
        if !minors.iter().all(Scalar::is_positive) {
            return Err(GeodesicError::NotPositiveDefinite {
                minors: minors.iter().map(ToString::to_string).collect(),
            });
        }
        Ok(MetricLieAlgebra { algebra, gram })
    }

    pub fn standard(algebra: LieAlgebra) -> Self {
        let n = algebra.dim();
        MetricLieAlgebra { algebra, gram: Matrix::identity(n) }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn inner(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let gv = self.gram.apply(v).expect("length checked by caller");
        dot(u, &gv)
    }

    pub fn orthogonal_complement(&self, s: &Subspace) -> Subspace {
        let n = self.algebra.dim();
        if s.is_zero() {
            return Subspace::full(n);
        }
        let m = s.basis().mul(&self.gram).expect("square gram");
        Subspace::kernel(&m)
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<(), GeodesicError> {
        let n = self.algebra.dim();
        if v.len() != n {
            return Err(GeodesicError::WrongLength { expected: n, found: v.len() });
        }
        if is_zero_vector(v) {
            return Err(GeodesicError::ZeroVector);
        }
        Ok(())
    }
}

/// `v` is geodesic iff `<[v, x], v> = 0` for every basis vector `x`.
pub fn is_geodesic(m: &MetricLieAlgebra, v: &[Scalar]) -> Result<bool, GeodesicError> {
    m.check_vector(v)?;
    let g = &m.algebra;
    let gv = m.gram.apply(v)?;
    Ok((0..g.dim()).all(|i| {
        let x = crate::exactlin::unit_vector(g.dim(), i);
        dot(&g.bracket_unchecked(v, &x), &gv).is_zero()
    }))
}

/// Whether some inner product makes `y` geodesic: no `x` with `[x, y] = y`.
pub fn geodesic_admissible(g: &LieAlgebra, y: &[Scalar]) -> Result<bool, GeodesicError> {
    let n = g.dim();
    if y.len() != n {
        return Err(GeodesicError::WrongLength { expected: n, found: y.len() });
    }
    if is_zero_vector(y) {
        return Err(GeodesicError::ZeroVector);
    }
    let image: Vec<Vector> = (0..n)
        .map(|i| g.bracket_unchecked(&crate::exactlin::unit_vector(n, i), y))
        .collect();
    Ok(!Subspace::span(&image, n)?.contains_vector(y))
}

pub fn is_totally_geodesic_subalgebra(m: &MetricLieAlgebra, v: &Subspace) -> Result<bool, GeodesicError> {
    let g = &m.algebra;
    if !g.is_subalgebra(v) {
        return Err(GeodesicError::NotSubalgebra);
    }
    let perp = m.orthogonal_complement(v);
    let vs = v.basis_vectors();
    for h in perp.basis_vectors() {
        for (a, v1) in vs.iter().enumerate() {
            for v2 in &vs[a..] {
                let s = m.inner(&g.bracket_unchecked(&h, v1), v2) + m.inner(v1, &g.bracket_unchecked(&h, v2));
                if !s.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn is_orthonormal_geodesic_basis(m: &MetricLieAlgebra, basis: &[Vector]) -> Result<bool, GeodesicError> {
    let n = m.algebra.dim();
    if basis.len() != n || basis.iter().any(|b| b.len() != n) || Subspace::span(basis, n)?.dim() != n {
        return Err(GeodesicError::NotBasis);
    }
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate().skip(i) {
            let expected = if i == j { Scalar::from_int(1) } else { Scalar::from_int(0) };
            if m.inner(a, b) != expected {
                return Ok(false);
            }
        }
    }
    for b in basis {
        if !is_geodesic(m, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of a bounded scan for geodesic integer vectors. Never exhaustive:
/// geodesics with larger or irrational coordinates are not examined.
#[derive(Debug, Clone, Serialize)]
pub struct GeodesicScan {
    pub height: i64,
    pub examined: usize,
    pub found: Vec<Vector>,
    pub exhaustive: bool,
}

/// Integer vectors with entries in `[-height, height]`, one per line through
/// the origin (first nonzero entry positive), stopping after `limit` hits.
pub fn scan_geodesics(m: &MetricLieAlgebra, height: i64, limit: usize) -> GeodesicScan {
    let n = m.algebra.dim();
    let width = (2 * height + 1) as u64;
    let total = width.checked_pow(n as u32).unwrap_or(u64::MAX);
    let mut scan = GeodesicScan { height, examined: 0, found: Vec::new(), exhaustive: false };
    for code in 0..total {
        if scan.found.len() >= limit {
            break;
        }
        let mut c = code;
        let mut xs = Vec::with_capacity(n);
        for _ in 0..n {
            xs.push((c % width) as i64 - height);
            c /= width;
        }
        match xs.iter().find(|&&x| x != 0) {
            Some(&first) if first > 0 => {}
            _ => continue,
        }
        let v = crate::exactlin::int_vector(&xs);
        scan.examined += 1;
        if is_geodesic(m, &v).unwrap_or(false) {
            scan.found.push(v);
        }
    }
    scan
}
