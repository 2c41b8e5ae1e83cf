use serde::Serialize;

use super::{Poly, PolyError};
use crate::exactlin::{Matrix, Scalar, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    IndefiniteOrSemi,
}

/// Symmetric matrix `S` with `q(x) = x^T S x`.
pub fn quadratic_form_matrix(q: &Poly) -> Result<Matrix, PolyError> {
    if !q.is_homogeneous(2) {
        return Err(PolyError::NotQuadraticForm);
    }
    let n = q.nvars();
    let mut s = Matrix::zeros(n, n);
    let half = Scalar::new(1, 2);
    for (m, c) in q.terms() {
        let idx: Vec<usize> = m
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize))
            .collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            s[(i, i)] = c.clone();
        } else {
            let h = c * &half;
            s[(i, j)] = h.clone();
            s[(j, i)] = h;
        }
    }
    Ok(s)
}

/// Classifies a real quadratic form by Sylvester's criterion on the leading
/// principal minors of its matrix.
pub fn quadratic_definiteness(q: &Poly) -> Result<Definiteness, PolyError> {
    let s = quadratic_form_matrix(q)?;
    if s.rows() == 0 {
        return Ok(Definiteness::IndefiniteOrSemi);
    }
    let minors = s.leading_principal_minors().expect("square");
    if minors.iter().all(Scalar::is_positive) {
        return Ok(Definiteness::PositiveDefinite);
    }
    let alternating = minors
        .iter()
        .enumerate()
        .all(|(k, d)| if k % 2 == 0 { d.is_negative() } else { d.is_positive() });
    if alternating {
        return Ok(Definiteness::NegativeDefinite);
    }
    Ok(Definiteness::IndefiniteOrSemi)
}

/// Sylvester inertia `(positive, negative, zero)` of a symmetric matrix, by
/// symmetric Gaussian elimination with congruence pivoting.
pub fn inertia(s: &Matrix) -> (usize, usize, usize) {
    assert!(s.is_symmetric(), "inertia of a non-symmetric matrix");
    let mut m = s.clone();
    let mut n = m.rows();
    let (mut pos, mut neg) = (0, 0);
    let mut zero = 0;
    while n > 0 {
        let piv = (0..n).find(|&i| !m[(i, i)].is_zero());
        let p = match piv {
            Some(p) => p,
            None => {
                let off = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| i != j && !m[(i, j)].is_zero());
                let Some((i, j)) = off else {
                    zero += n;
                    break;
                };
                // Replace e_i by e_i + e_j: diagonal entry becomes 2 m_ij.
                for k in 0..n {
                    let v = &m[(i, k)] + &m[(j, k)];
                    m[(i, k)] = v;
                }
                for k in 0..n {
                    let v = &m[(k, i)] + &m[(k, j)];
                    m[(k, i)] = v;
                }
                i
            }
        };
        let d = m[(p, p)].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&k| k != p).collect();
        let next = Matrix::from_fn(n - 1, n - 1, |a, b| {
            let (i, j) = (rest[a], rest[b]);
            &m[(i, j)] - &(&(&m[(i, p)] * &m[(p, j)]) / &d)
        });
        m = next;
        n -= 1;
    }
    (pos, neg, zero)
}

/// For a semidefinite form, the real zero set `{x : q(x) = 0}` is the kernel
/// of its matrix. Returns `None` when the form is indefinite.
pub fn semidefinite_zero_set(q: &Poly) -> Result<Option<Subspace>, PolyError> {
    let s = quadratic_form_matrix(q)?;
    let (p, n, _) = inertia(&s);
    if p > 0 && n > 0 {
        return Ok(None);
    }
    Ok(Some(Subspace::kernel(&s)))
}
