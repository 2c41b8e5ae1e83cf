//! Respectful decompositions `g = H + V` with `[V, H] ⊆ H`, their derived
//! subspaces and the induced algebra on `V`.

mod lemmas;

use std::sync::OnceLock;

use serde::Serialize;

pub use lemmas::{
    adapted_basis, check_lji, structural_conditions_dim6, AdaptedBasis, Clause, ClauseResult,
    LjiReport, StructuralReport,
};

use crate::exactlin::{is_zero_vector, LinalgError, Matrix, Scalar, Subspace, Vector};
use crate::liealg::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("H and V are not complementary (dim H = {h}, dim V = {v}, dim H+V = {sum}, ambient {n})")]
    NotComplementary { h: usize, v: usize, sum: usize, n: usize },
    #[error("V does not respect H")]
    NotRespectful,
    #[error("decomposition is not open")]
    NotOpen,
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("requires {what}")]
    Precondition { what: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Isomorphism type of a small nilpotent algebra, decided by the dimensions
/// of its derived algebra and center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AlgebraType {
    #[serde(rename = "R^3")]
    Abelian3,
    #[serde(rename = "h3")]
    Heisenberg3,
    #[serde(rename = "f4")]
    Filiform4,
    #[serde(rename = "R+h3")]
    RPlusH3,
    #[serde(rename = "R^4")]
    Abelian4,
    #[serde(rename = "other")]
    Other,
}

impl AlgebraType {
    pub fn label(self) -> &'static str {
        match self {
            AlgebraType::Abelian3 => "R^3",
            AlgebraType::Heisenberg3 => "h3",
            AlgebraType::Filiform4 => "f4",
            AlgebraType::RPlusH3 => "R+h3",
            AlgebraType::Abelian4 => "R^4",
            AlgebraType::Other => "other",
        }
    }
}

impl std::fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Nilpotent algebras of dimension 3 and 4 are determined by
/// `(dim [a,a], dim Z(a))`.
pub fn identify_type(a: &LieAlgebra) -> AlgebraType {
    if !a.is_nilpotent() {
        return AlgebraType::Other;
    }
    let d = a.derived().dim();
    let z = a.center().dim();
    match (a.dim(), d, z) {
        (3, 0, _) => AlgebraType::Abelian3,
        (3, 1, 1) => AlgebraType::Heisenberg3,
        (4, 0, _) => AlgebraType::Abelian4,
        (4, 1, 2) => AlgebraType::RPlusH3,
        (4, 2, 1) => AlgebraType::Filiform4,
        _ => AlgebraType::Other,
    }
}

/// Everything `analyze` computes about a decomposition.
#[derive(Debug, Clone)]
pub struct DecompAnalysis {
    pub respects: bool,
    pub h_is_subalgebra: bool,
    pub v_is_subalgebra: bool,
    pub open: bool,
    pub mutual: bool,
    pub h_v: Subspace,
    pub v_h: Subspace,
    pub k_h: Subspace,
    pub vbar: Subspace,
    pub hbar: Subspace,
    /// `V` with bracket `pi_V [.,.]` on the canonical basis of `V`, named
    /// `v1, v2, ...`. A Lie algebra whenever `respects` holds.
    pub induced_v: LieAlgebra,
    pub induced_v_abelian: bool,
}

/// An ordered pair `(H, V)` of complementary subspaces of `g`.
#[derive(Debug)]
pub struct Decomposition<'a> {
    g: &'a LieAlgebra,
    h: Subspace,
    v: Subspace,
    // Inverse of the matrix whose columns are the H basis then the V basis.
    to_merged: Matrix,
    analysis: OnceLock<DecompAnalysis>,
}

impl<'a> Decomposition<'a> {
    pub fn new(g: &'a LieAlgebra, h: Subspace, v: Subspace) -> Result<Self, DecompError> {
        let n = g.dim();
        for s in [&h, &v] {
            if s.ambient_dim() != n {
                return Err(LinalgError::DimensionMismatch {
                    expected: n,
                    found: s.ambient_dim(),
                }
                .into());
            }
        }
        let sum = h.sum(&v)?;
        if h.dim() + v.dim() != n || sum.dim() != n {
            return Err(DecompError::NotComplementary {
                h: h.dim(),
                v: v.dim(),
                sum: sum.dim(),
                n,
            });
        }
        let mut cols = h.basis_vectors();
        cols.extend(v.basis_vectors());
        let merged = Matrix::from_rows(&cols, n)?.transpose();
        let to_merged = merged.inverse()?;
        Ok(Decomposition {
            g,
            h,
            v,
            to_merged,
            analysis: OnceLock::new(),
        })
    }

    pub fn from_vectors(g: &'a LieAlgebra, h: &[Vector], v: &[Vector]) -> Result<Self, DecompError> {
        let n = g.dim();
        Self::new(g, Subspace::span(h, n)?, Subspace::span(v, n)?)
    }

    pub fn algebra(&self) -> &'a LieAlgebra {
        self.g
    }

    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn v(&self) -> &Subspace {
        &self.v
    }

    /// Coordinates of `x` on the H basis and on the V basis.
    pub fn split_coordinates(&self, x: &[Scalar]) -> (Vector, Vector) {
        let c = self.to_merged.apply(x).expect("ambient length");
        let k = self.h.dim();
        (c[..k].to_vec(), c[k..].to_vec())
    }

    fn combine(basis: &Subspace, coords: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); basis.ambient_dim()];
        for (i, c) in coords.iter().enumerate() {
            crate::exactlin::axpy(&mut out, c, basis.basis().row(i));
        }
        out
    }

    pub fn pi_h(&self, x: &[Scalar]) -> Vector {
        Self::combine(&self.h, &self.split_coordinates(x).0)
    }

    pub fn pi_v(&self, x: &[Scalar]) -> Vector {
        Self::combine(&self.v, &self.split_coordinates(x).1)
    }

    /// `[V, H] ⊆ H`.
    pub fn respects(&self) -> bool {
        self.h.contains(&self.g.subspace_bracket(&self.v, &self.h))
    }

    pub fn analyze(&self) -> &DecompAnalysis {
        self.analysis.get_or_init(|| self.compute())
    }

    fn compute(&self) -> DecompAnalysis {
        let g = self.g;
        let n = g.dim();
        let hb = self.h.basis_vectors();
        let vb = self.v.basis_vectors();
        let respects = self.respects();
        let h_is_subalgebra = g.is_subalgebra(&self.h);
        let v_is_subalgebra = g.is_subalgebra(&self.v);
        let mutual = respects && self.v.contains(&g.subspace_bracket(&self.h, &self.v));

        let mut hv = Vec::new();
        for i in 0..vb.len() {
            for j in i + 1..vb.len() {
                hv.push(self.pi_h(&g.bracket_unchecked(&vb[i], &vb[j])));
            }
        }
        let h_v = Subspace::span(&hv, n).expect("lengths");

        // v_coords[i][j]: V-coordinates of [h_i, h_j].
        let k = hb.len();
        let v_coords: Vec<Vec<Vector>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| self.split_coordinates(&g.bracket_unchecked(&hb[i], &hb[j])).1)
                    .collect()
            })
            .collect();
        let mut vh = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                vh.push(Self::combine(&self.v, &v_coords[i][j]));
            }
        }
        let v_h = Subspace::span(&vh, n).expect("lengths");

        // K_H: sum_i a_i h_i with sum_i a_i pi_V[h_i, h_j] = 0 for every j.
        let mut rows = Vec::new();
        for j in 0..k {
            for c in 0..self.v.dim() {
                rows.push((0..k).map(|i| v_coords[i][j][c].clone()).collect::<Vector>());
            }
        }
        let k_h = if rows.is_empty() {
            self.h.clone()
        } else {
            let m = Matrix::from_rows(&rows, k).expect("rows of length dim H");
            let kers: Vec<Vector> = m
                .kernel_vectors()
                .iter()
                .map(|a| Self::combine(&self.h, a))
                .collect();
            Subspace::span(&kers, n).expect("lengths")
        };

        let vbar = self.v.sum(&h_v).expect("same ambient");
        let hbar = self.h.sum(&v_h).expect("same ambient");
        let names = (1..=vb.len()).map(|i| format!("v{i}")).collect();
        let induced_v = g
            .algebra_on_basis(&format!("{}|induced", g.name()), names, &vb, |w| {
                self.split_coordinates(w).1
            })
            .expect("basis names are distinct");
        let induced_v_abelian = induced_v.is_abelian();
        DecompAnalysis {
            respects,
            h_is_subalgebra,
            v_is_subalgebra,
            open: respects && !h_is_subalgebra && !v_is_subalgebra,
            mutual,
            h_v,
            v_h,
            k_h,
            vbar,
            hbar,
            induced_v,
            induced_v_abelian,
        }
    }

    /// Type of the ideal `H + V_H` as an algebra.
    pub fn hbar_type(&self) -> AlgebraType {
        let a = self.analyze();
        match self.g.subalgebra_structure(&a.hbar) {
            Ok(s) => identify_type(&s),
            Err(_) => AlgebraType::Other,
        }
    }

    pub fn induced_type(&self) -> AlgebraType {
        identify_type(&self.analyze().induced_v)
    }

    /// Induced bracket `pi_V [a, b]` of two vectors of `V`.
    pub fn induced_bracket(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.pi_v(&self.g.bracket_unchecked(a, b))
    }
}

/// `[X, Y] = 0` for subspaces.
pub fn commute(g: &LieAlgebra, x: &Subspace, y: &Subspace) -> bool {
    g.subspace_bracket(x, y).is_zero()
}

pub(crate) fn nonzero(v: &[Scalar]) -> bool {
    !is_zero_vector(v)
}
