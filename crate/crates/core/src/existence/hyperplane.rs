//! Decision for abelian ideals of codimension one.
//!
//! A hyperplane `ker phi` containing `[g,g]` is automatically an ideal. It is
//! abelian iff every alternating form `B_k(x, y) = k-th derived coordinate of
//! [x, y]` vanishes on it, i.e. `B_k = 0` or `B_k` has rank 2 with `phi` in
//! its row space.

use serde::Serialize;

use super::ExistenceError;
use crate::exactlin::{Matrix, Subspace, Vector};
use crate::liealg::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "answer", rename_all = "snake_case")]
pub enum HyperplaneAnswer {
    Yes { functional: Vector },
    /// Some form has rank at least 4, so it cannot vanish on a hyperplane.
    HighRank { derived_coordinate: usize, rank: usize },
    /// The rank-2 supports meet the annihilator of `[g,g]` only in zero.
    EmptyIntersection,
}

impl HyperplaneAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, HyperplaneAnswer::Yes { .. })
    }
}

/// Forms `B_k` indexed by the pivot coordinates of the canonical basis of
/// `[g,g]`; these coordinates restrict to a basis of the dual of `[g,g]`.
pub(crate) fn derived_forms(g: &LieAlgebra) -> (Subspace, Vec<Matrix>) {
    let d = g.derived();
    let n = g.dim();
    let forms = d
        .pivots()
        .iter()
        .map(|&p| Matrix::from_fn(n, n, |i, j| g.bracket_basis(i, j)[p].clone()))
        .collect();
    (d, forms)
}

pub fn abelian_hyperplane(g: &LieAlgebra) -> Result<HyperplaneAnswer, ExistenceError> {
    let (d, forms) = derived_forms(g);
    let n = g.dim();
    if n > 0 && d.dim() == n {
        return Err(ExistenceError::Perfect);
    }
    let mut acc = d.annihilator();
    for (k, b) in forms.iter().enumerate() {
        let r = b.rank();
        if r >= 4 {
            return Ok(HyperplaneAnswer::HighRank { derived_coordinate: d.pivots()[k], rank: r });
        }
        if r == 2 {
            acc = acc.intersect(&Subspace::row_space(b))?;
        }
    }
    if acc.is_zero() {
        return Ok(HyperplaneAnswer::EmptyIntersection);
    }
    Ok(HyperplaneAnswer::Yes { functional: acc.basis().row(0).to_vec() })
}

/// `phi != 0`, `phi([g,g]) = 0` and `ker phi` abelian.
pub(crate) fn verify_functional(g: &LieAlgebra, phi: &[crate::exactlin::Scalar]) -> Result<(), String> {
    let n = g.dim();
    if phi.len() != n || crate::exactlin::is_zero_vector(phi) {
        return Err("functional is zero or has the wrong length".into());
    }
    for x in g.derived().basis_vectors() {
        if !crate::exactlin::dot(phi, &x).is_zero() {
            return Err("functional does not vanish on [g,g]".into());
        }
    }
    let ker = Subspace::kernel(&Matrix::from_rows(&[phi.to_vec()], n).map_err(|e| e.to_string())?);
    if !g.subspace_bracket(&ker, &ker).is_zero() {
        return Err("kernel is not abelian".into());
    }
    Ok(())
}
