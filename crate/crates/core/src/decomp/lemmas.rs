//! Concrete checks of the structural consequences of a respectful
//! decomposition.

use serde::Serialize;

use super::{commute, identify_type, nonzero, AlgebraType, DecompError, Decomposition};
use crate::exactlin::{coordinates_in, Matrix, Subspace, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Clause {
    /// `[K_H, K_H] ⊆ K_H`.
    KernelIsSubalgebra,
    /// `[V, K_H] ⊆ K_H`.
    VPreservesKernel,
    /// `H_V ⊆ K_H`.
    HvInKernel,
    /// `V_H` is an ideal of the induced algebra.
    VhIdealOfInduced,
    /// `H + V_H` is an ideal of `g`.
    HbarIsIdeal,
    /// Open implies `dim H >= 3`.
    OpenHasDimHAtLeastThree,
    /// Open with `dim H = 3` implies `H_V = K_H` of dimension 1.
    OpenDimThreeKernelIsLine,
}

impl Clause {
    pub const ALL: [Clause; 7] = [
        Clause::KernelIsSubalgebra,
        Clause::VPreservesKernel,
        Clause::HvInKernel,
        Clause::VhIdealOfInduced,
        Clause::HbarIsIdeal,
        Clause::OpenHasDimHAtLeastThree,
        Clause::OpenDimThreeKernelIsLine,
    ];

    pub fn letter(self) -> char {
        (b'a' + Clause::ALL.iter().position(|&c| c == self).unwrap() as u8) as char
    }

    pub fn description(self) -> &'static str {
        match self {
            Clause::KernelIsSubalgebra => "[K_H,K_H] in K_H",
            Clause::VPreservesKernel => "[V,K_H] in K_H",
            Clause::HvInKernel => "H_V in K_H",
            Clause::VhIdealOfInduced => "V_H ideal of induced V",
            Clause::HbarIsIdeal => "H+V_H ideal of g",
            Clause::OpenHasDimHAtLeastThree => "open => dim H >= 3",
            Clause::OpenDimThreeKernelIsLine => "open, dim H = 3 => H_V = K_H, dim 1",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClauseResult {
    pub clause: Clause,
    pub letter: char,
    pub description: &'static str,
    pub holds: bool,
    /// False when the hypothesis of an implication is not met.
    pub applicable: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LjiReport {
    pub clauses: Vec<ClauseResult>,
}

impl LjiReport {
    pub fn all_hold(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }
}

pub fn check_lji(d: &Decomposition<'_>) -> Result<LjiReport, DecompError> {
    let g = d.algebra();
    let a = d.analyze();
    if !a.respects {
        return Err(DecompError::NotRespectful);
    }
    let k_h = &a.k_h;
    let vh_ideal = {
        let vb = d.v().basis_vectors();
        let wb = a.v_h.basis_vectors();
        vb.iter()
            .all(|v| wb.iter().all(|w| a.v_h.contains_vector(&d.induced_bracket(v, w))))
    };
    let dim_h = d.h().dim();
    let mut clauses = Vec::new();
    let mut push = |clause: Clause, applicable: bool, holds: bool| {
        clauses.push(ClauseResult {
            clause,
            letter: clause.letter(),
            description: clause.description(),
            holds: !applicable || holds,
            applicable,
        })
    };
    push(Clause::KernelIsSubalgebra, true, g.is_subalgebra(k_h));
    push(Clause::VPreservesKernel, true, k_h.contains(&g.subspace_bracket(d.v(), k_h)));
    push(Clause::HvInKernel, true, k_h.contains(&a.h_v));
    push(Clause::VhIdealOfInduced, true, vh_ideal);
    push(Clause::HbarIsIdeal, true, g.is_ideal(&a.hbar));
    push(Clause::OpenHasDimHAtLeastThree, a.open, dim_h >= 3);
    push(
        Clause::OpenDimThreeKernelIsLine,
        a.open && dim_h == 3,
        a.h_v == *k_h && a.h_v.dim() == 1,
    );
    Ok(LjiReport { clauses })
}

/// Basis `(h1, h2, h3)` of `H` with `h3` spanning `H_V` and the action of
/// `V + H_V` on `H / span(h3)` strictly lower triangular.
#[derive(Debug, Clone, Serialize)]
pub struct AdaptedBasis {
    pub h1: Vector,
    pub h2: Vector,
    pub h3: Vector,
    /// `pi_V [h1, h2]`, spanning `V_H`.
    pub v3: Vector,
}

fn require_open_nilpotent_dim_h3(d: &Decomposition<'_>) -> Result<(), DecompError> {
    let a = d.analyze();
    if !a.respects {
        return Err(DecompError::NotRespectful);
    }
    if !a.open {
        return Err(DecompError::NotOpen);
    }
    if !d.algebra().is_nilpotent() {
        return Err(DecompError::NotNilpotent);
    }
    if d.h().dim() != 3 {
        return Err(DecompError::Precondition { what: "dim H = 3".into() });
    }
    Ok(())
}

pub fn adapted_basis(d: &Decomposition<'_>) -> Result<AdaptedBasis, DecompError> {
    require_open_nilpotent_dim_h3(d)?;
    let g = d.algebra();
    let a = d.analyze();
    if a.h_v.dim() != 1 {
        return Err(DecompError::Internal(format!("dim H_V = {}", a.h_v.dim())));
    }
    let h3 = a.h_v.basis().row(0).to_vec();
    let comp = a.h_v.complement(d.h())?.basis_vectors();
    let frame = vec![comp[0].clone(), comp[1].clone(), h3.clone()];

    // Quotient action of each Vbar basis vector on H / span(h3), as rows of
    // a stacked matrix acting on (c1, c2) coordinates.
    let mut rows: Vec<Vector> = Vec::new();
    for z in a.vbar.basis_vectors() {
        let images: Vec<Vector> = comp
            .iter()
            .map(|c| {
                coordinates_in(&frame, &g.bracket_unchecked(&z, c))
                    .ok_or_else(|| DecompError::Internal("Vbar does not preserve H".into()))
            })
            .collect::<Result<_, _>>()?;
        for r in 0..2 {
            rows.push(vec![images[0][r].clone(), images[1][r].clone()]);
        }
    }
    let joint = Matrix::from_rows(&rows, 2)?.kernel_vectors();
    let k = joint
        .first()
        .ok_or_else(|| DecompError::Internal("no common null vector (Engel)".into()))?;
    let combo = |c: &[crate::exactlin::Scalar]| {
        let mut out = crate::exactlin::scale_vector(&c[0], &comp[0]);
        crate::exactlin::axpy(&mut out, &c[1], &comp[1]);
        out
    };
    let h2 = combo(k);
    // h1: first of c1, c2 independent of h2 modulo h3.
    let h1 = if k[1].is_zero() { comp[1].clone() } else { comp[0].clone() };

    let v3 = d.pi_v(&g.bracket_unchecked(&h1, &h2));
    if nonzero(&g.bracket_unchecked(&h2, &h3)) {
        return Err(DecompError::Internal("[h2, h3] != 0".into()));
    }
    if !nonzero(&v3) {
        return Err(DecompError::Internal("pi_V [h1, h2] = 0".into()));
    }
    Ok(AdaptedBasis { h1, h2, h3, v3 })
}

#[derive(Debug, Clone, Serialize)]
pub struct Conclusion {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructuralReport {
    pub basis: AdaptedBasis,
    pub conclusions: Vec<Conclusion>,
}

impl StructuralReport {
    pub fn all_hold(&self) -> bool {
        self.conclusions.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.conclusions.iter().filter(|c| !c.holds).map(|c| c.name).collect()
    }
}

/// Consequences of an open respectful decomposition with `dim H = 3` of a
/// 6-dimensional nilpotent algebra, checked on the concrete subspaces.
pub fn structural_conditions_dim6(d: &Decomposition<'_>) -> Result<StructuralReport, DecompError> {
    require_open_nilpotent_dim_h3(d)?;
    let g = d.algebra();
    if g.dim() != 6 {
        return Err(DecompError::Precondition { what: "dim g = 6".into() });
    }
    let a = d.analyze();
    let basis = adapted_basis(d)?;
    let n = g.dim();
    let span = |vs: &[&Vector]| Subspace::span(&vs.iter().map(|v| (*v).clone()).collect::<Vec<_>>(), n).expect("lengths");
    let h3_v3 = span(&[&basis.h3, &basis.v3]);
    let h2_h3_v3 = span(&[&basis.h2, &basis.h3, &basis.v3]);
    let h3_line = span(&[&basis.h3]);
    let z = g.center();
    let dd = g.derived();

    let vbar_alg = g.subalgebra_structure(&a.vbar).ok();
    let vbar_signature = vbar_alg
        .as_ref()
        .is_some_and(|s| s.center().dim() == 2 && s.derived().dim() == 1);
    let vbar_center = a.vbar.intersect(&g.centralizer(&a.vbar))?;
    let hbar_center = a.hbar.intersect(&g.centralizer(&a.hbar))?;
    let hbar_type = g
        .subalgebra_structure(&a.hbar)
        .map(|s| identify_type(&s))
        .unwrap_or(AlgebraType::Other);

    let hbar_is_r_h3 = hbar_type == AlgebraType::RPlusH3;
    let center_two = z.dim() == 2;
    let center_is_h3v3 = z == h3_v3;

    let conclusions = vec![
        Conclusion { name: "[V,H_V] = 0", holds: commute(g, d.v(), &a.h_v) },
        Conclusion { name: "Vbar has 2-dim center and 1-dim derived algebra", holds: vbar_signature },
        Conclusion { name: "V_H in Z(Vbar)", holds: vbar_center.contains(&a.v_h) },
        Conclusion { name: "Z(g) in span(h3,v3)", holds: h3_v3.contains(&z) },
        Conclusion { name: "Z(Hbar) = Z(g)", holds: hbar_center == z },
        Conclusion { name: "[g,g] in span(h2,h3,v3)", holds: h2_h3_v3.contains(&dd) },
        Conclusion { name: "dim [g,g] <= 3", holds: dd.dim() <= 3 },
        Conclusion {
            name: "induced V abelian => h3 in Z(g)",
            holds: !a.induced_v_abelian || z.contains(&h3_line),
        },
        Conclusion {
            name: "Hbar = R+h3 <=> dim Z(g) = 2 <=> Z(g) = span(h3,v3)",
            holds: hbar_is_r_h3 == center_two && center_two == center_is_h3v3,
        },
        Conclusion {
            name: "dim Z(g) = 1 => [g, span(h2,h3,v3)] not in Z(g)",
            holds: z.dim() != 1 || !z.contains(&g.subspace_bracket(&g.full(), &h2_h3_v3)),
        },
    ];
    Ok(StructuralReport { basis, conclusions })
}
