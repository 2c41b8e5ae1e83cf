//! Radical pencil obstruction.
//!
//! A 2-dimensional `V` has `[V, g] != [g, g]` iff some nonzero functional
//! `psi` on `[g, g]` kills `[V, g]`, i.e. `V` lies in the radical of
//! `B_psi(x, y) = psi([x, y])`. If every such radical is abelian, no `V`
//! also has `[V, V] != 0`.
//!
//! Functionals are parametrized linearly, `psi = T s`. On a stratum the
//! generic rank `2p` is read off the principal Pfaffians; the radical is
//! given by adjugate formulas on one chart and its brackets must vanish as
//! polynomials. Points of lower rank lie in the common zero set of the
//! `2p`-Pfaffians, which is bounded by linear forms, semidefinite quadratic
//! forms (zero set = kernel) or a definite quadratic form (zero set = 0).

use std::sync::Arc;

use serde::Serialize;

use super::hyperplane::derived_forms;
use super::search::Combinations;
use super::ExistenceError;
use crate::exactlin::{Matrix, Scalar, Subspace, Vector};
use crate::liealg::LieAlgebra;
use crate::sympoly::{quadratic_definiteness, semidefinite_zero_set, variables, Definiteness, Poly, SymMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintKind {
    Linear,
    Definite,
    Semidefinite,
}

/// A principal Pfaffian of the stratum's maximal size, bounding the locus
/// where the rank drops.
#[derive(Debug, Clone, Serialize)]
pub struct Constraint {
    pub indices: Vec<usize>,
    pub form: Poly,
    pub kind: ConstraintKind,
}

#[derive(Debug, Clone, Serialize)]
pub struct PencilStratum {
    /// `psi = param * s` in coordinates dual to the derived pivots.
    pub param: Matrix,
    pub vars: Vec<String>,
    pub rank: usize,
    pub chart: Vec<usize>,
    pub pfaffian: Poly,
    /// Radical basis on `{pfaffian != 0}`; entry `j` of the vector for
    /// `j` outside the chart is `pfaffian^2`.
    pub radical: Vec<Vec<Poly>>,
    pub constraints: Vec<Constraint>,
    /// Stratum covering the rank-drop locus, if it is not `{0}`.
    pub child: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PencilCertificate {
    pub derived_pivots: Vec<usize>,
    pub strata: Vec<PencilStratum>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PencilOutcome {
    Obstructed(PencilCertificate),
    /// `v1, v2` lie in the radical of `psi` and do not commute.
    NotObstructed { psi: Vector, v1: Vector, v2: Vector },
    Unknown { reason: String },
}

fn var_names(r: usize) -> Arc<[String]> {
    if r <= 26 {
        let names: Vec<String> = (0..r).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        variables(&names)
    } else {
        let names: Vec<String> = (1..=r).map(|i| format!("s{i}")).collect();
        variables(&names)
    }
}

/// `B_{param s}` as a matrix of linear forms in `s`.
pub fn pencil_matrix(g: &LieAlgebra, param: &Matrix, vars: &Arc<[String]>) -> SymMatrix {
    let (_, forms) = derived_forms(g);
    pencil_from_forms(&forms, g.dim(), param, vars)
}

fn pencil_from_forms(forms: &[Matrix], n: usize, param: &Matrix, vars: &Arc<[String]>) -> SymMatrix {
    let r = param.cols();
    SymMatrix::antisymmetric_from(vars, n, |i, j| {
        let coeffs: Vec<Scalar> = (0..r)
            .map(|l| {
                forms
                    .iter()
                    .enumerate()
                    .map(|(k, b)| &param[(k, l)] * &b[(i, j)])
                    .sum()
            })
            .collect();
        Poly::linear(vars, &coeffs)
    })
}

/// Nonzero principal Pfaffians of the largest size that has any.
fn top_pfaffians(m: &SymMatrix) -> (usize, Vec<(Vec<usize>, Poly)>) {
    let n = m.size();
    let mut size = n - n % 2;
    while size >= 2 {
        let found: Vec<(Vec<usize>, Poly)> = Combinations::new(n, size)
            .filter_map(|idx| {
                let pf = m.principal_submatrix(&idx).pfaffian().expect("even antisymmetric");
                (!pf.is_zero()).then_some((idx, pf))
            })
            .collect();
        if !found.is_empty() {
            return (size, found);
        }
        size -= 2;
    }
    (0, Vec::new())
}

fn radical_vectors(m: &SymMatrix, chart: &[usize], pf: &Poly) -> Vec<Vec<Poly>> {
    let n = m.size();
    let vars = m.variables();
    let det = pf.pow(2);
    let sub = m.principal_submatrix(chart);
    let adj = if chart.is_empty() { Vec::new() } else { sub.adjugate() };
    let free: Vec<usize> = (0..n).filter(|j| !chart.contains(j)).collect();
    free.iter()
        .map(|&j| {
            let mut k = vec![Poly::zero(vars); n];
            k[j] = det.clone();
            for (a, &ia) in chart.iter().enumerate() {
                let mut acc = Poly::zero(vars);
                for (b, &ib) in chart.iter().enumerate() {
                    acc = &acc - &(&adj[a][b] * m.get(ib, j));
                }
                k[ia] = acc;
            }
            k
        })
        .collect()
}

fn poly_bracket(g: &LieAlgebra, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let n = g.dim();
    let vars = a[0].variables().clone();
    let mut out = vec![Poly::zero(&vars); n];
    for i in 0..n {
        for j in i + 1..n {
            let sc = g.structure_constants(i, j);
            if sc.is_empty() {
                continue;
            }
            let coef = &(&a[i] * &b[j]) - &(&a[j] * &b[i]);
            if coef.is_zero() {
                continue;
            }
            for (k, c) in sc {
                out[*k] = &out[*k] + &coef.scale(c);
            }
        }
    }
    out
}

fn eval_vec(v: &[Poly], s: &[Scalar]) -> Vector {
    v.iter().map(|p| p.evaluate(s).expect("arity")).collect()
}

/// Nonzero points of `{-2..2}^r` in a fixed order.
fn small_points(r: usize) -> impl Iterator<Item = Vec<Scalar>> {
    (0..5usize.pow(r as u32)).filter_map(move |mut code| {
        let p: Vec<i64> = (0..r)
            .map(|_| {
                let d = (code % 5) as i64 - 2;
                code /= 5;
                d
            })
            .collect();
        p.iter().any(|&x| x != 0).then(|| p.into_iter().map(Scalar::from_int).collect())
    })
}

/// Matrix-vector product `param * s`.
fn apply(param: &Matrix, s: &[Scalar]) -> Vector {
    param.apply(s).expect("parameter count")
}

enum Step {
    Done,
    NonAbelian { psi: Vector, v1: Vector, v2: Vector },
    Unknown(String),
}

struct Analyzer<'a> {
    g: &'a LieAlgebra,
    forms: Vec<Matrix>,
    strata: Vec<PencilStratum>,
}

/// Subspace of parameter space containing the common zero set of the
/// constraints; `None` when a definite form makes it `{0}`.
fn locus_bound(constraints: &[Constraint], r: usize) -> Option<Subspace> {
    let mut k = Subspace::full(r);
    for c in constraints {
        let z = match c.kind {
            ConstraintKind::Definite => return None,
            ConstraintKind::Linear => {
                let row = c.form.linear_coefficients().expect("linear form");
                Subspace::kernel(&Matrix::from_rows(&[row], r).expect("length r"))
            }
            ConstraintKind::Semidefinite => semidefinite_zero_set(&c.form)
                .expect("quadratic form")
                .expect("semidefinite"),
        };
        k = k.intersect(&z).expect("same ambient");
    }
    Some(k)
}

fn child_param(param: &Matrix, k: &Subspace) -> Matrix {
    param.mul(&k.basis().transpose()).expect("shapes")
}

impl Analyzer<'_> {
    fn stratum(&mut self, param: Matrix) -> Step {
        let n = self.g.dim();
        let r = param.cols();
        let vars = var_names(r);
        let m = pencil_from_forms(&self.forms, n, &param, &vars);
        let (rank, pfs) = top_pfaffians(&m);
        let (chart, pf) = match pfs.first() {
            Some((idx, pf)) => (idx.clone(), pf.clone()),
            None => (Vec::new(), Poly::constant(&vars, Scalar::one())),
        };
        let radical = radical_vectors(&m, &chart, &pf);
        for a in 0..radical.len() {
            for b in a + 1..radical.len() {
                let br = poly_bracket(self.g, &radical[a], &radical[b]);
                if br.iter().all(Poly::is_zero) {
                    continue;
                }
                for s in small_points(r) {
                    if pf.evaluate(&s).expect("arity").is_zero() {
                        continue;
                    }
                    if crate::decomp::nonzero(&eval_vec(&br, &s)) {
                        return Step::NonAbelian {
                            psi: apply(&param, &s),
                            v1: eval_vec(&radical[a], &s),
                            v2: eval_vec(&radical[b], &s),
                        };
                    }
                }
                return Step::Unknown("radical is not abelian but no small witness point was found".into());
            }
        }

        let mut constraints = Vec::new();
        for (idx, form) in &pfs {
            let kind = match form.degree() {
                Some(1) => ConstraintKind::Linear,
                Some(2) if form.is_homogeneous(2) => match quadratic_definiteness(form) {
                    Ok(Definiteness::PositiveDefinite | Definiteness::NegativeDefinite) => {
                        ConstraintKind::Definite
                    }
                    _ => match semidefinite_zero_set(form) {
                        Ok(Some(_)) => ConstraintKind::Semidefinite,
                        _ => continue,
                    },
                },
                _ => continue,
            };
            constraints.push(Constraint { indices: idx.clone(), form: form.clone(), kind });
            if kind == ConstraintKind::Definite {
                constraints = constraints.split_off(constraints.len() - 1);
                break;
            }
        }
        let bound = if rank == 0 {
            None
        } else if constraints.is_empty() {
            let shown: Vec<String> = pfs.iter().map(|(_, p)| p.to_string()).collect();
            return Step::Unknown(format!(
                "rank-drop locus is cut out by {} and is neither linear nor definite",
                shown.join(", ")
            ));
        } else {
            locus_bound(&constraints, r)
        };
        let here = self.strata.len();
        self.strata.push(PencilStratum {
            param: param.clone(),
            vars: vars.to_vec(),
            rank,
            chart,
            pfaffian: pf,
            radical,
            constraints,
            child: None,
        });
        match bound {
            Some(k) if !k.is_zero() => {
                if k.dim() == r {
                    return Step::Unknown("rank-drop constraints do not cut down the parameters".into());
                }
                self.strata[here].child = Some(self.strata.len());
                self.stratum(child_param(&param, &k))
            }
            _ => Step::Done,
        }
    }
}

pub fn pencil_obstruction(g: &LieAlgebra) -> Result<PencilOutcome, ExistenceError> {
    if !g.is_nilpotent() {
        return Err(ExistenceError::NotNilpotent);
    }
    let (d, forms) = derived_forms(g);
    if d.is_zero() {
        return Err(ExistenceError::Precondition("dim [g,g] >= 1".into()));
    }
    let mut an = Analyzer { g, forms, strata: Vec::new() };
    Ok(match an.stratum(Matrix::identity(d.dim())) {
        Step::Done => PencilOutcome::Obstructed(PencilCertificate {
            derived_pivots: d.pivots().to_vec(),
            strata: an.strata,
        }),
        Step::NonAbelian { psi, v1, v2 } => PencilOutcome::NotObstructed { psi, v1, v2 },
        Step::Unknown(reason) => PencilOutcome::Unknown { reason },
    })
}

impl PencilCertificate {
    /// Re-derives every recorded polynomial from `g` and re-checks each
    /// claim: rank bound, chart Pfaffian, radical identities, bracket
    /// vanishing, constraint kinds and the parametrization of each child.
    pub fn replay(&self, g: &LieAlgebra) -> Result<(), String> {
        let n = g.dim();
        let (d, forms) = derived_forms(g);
        if d.pivots() != self.derived_pivots.as_slice() {
            return Err("derived pivots differ".into());
        }
        match self.strata.first() {
            Some(s) if s.param == Matrix::identity(d.dim()) => {}
            _ => return Err("root stratum must cover all functionals".into()),
        }
        for (idx, s) in self.strata.iter().enumerate() {
            let fail = |msg: &str| Err(format!("stratum {idx}: {msg}"));
            let r = s.param.cols();
            let vars = variables(&s.vars);
            if s.vars.len() != r {
                return fail("variable count");
            }
            let m = pencil_from_forms(&forms, n, &s.param, &vars);
            if s.rank + 2 <= n {
                for sub in Combinations::new(n, s.rank + 2) {
                    if !m.principal_submatrix(&sub).pfaffian().map_err(|e| e.to_string())?.is_zero() {
                        return fail("a larger principal Pfaffian is nonzero");
                    }
                }
            }
            if s.chart.len() != s.rank {
                return fail("chart size");
            }
            let pf = if s.chart.is_empty() {
                Poly::constant(&vars, Scalar::one())
            } else {
                m.principal_submatrix(&s.chart).pfaffian().map_err(|e| e.to_string())?
            };
            if pf.is_zero() || pf != s.pfaffian {
                return fail("chart Pfaffian");
            }
            let det = pf.pow(2);
            let free: Vec<usize> = (0..n).filter(|j| !s.chart.contains(j)).collect();
            if s.radical.len() != free.len() {
                return fail("radical size");
            }
            let radical = &s.radical;
            for (q, k) in radical.iter().enumerate() {
                for (t, &j) in free.iter().enumerate() {
                    let want = if t == q { det.clone() } else { Poly::zero(&vars) };
                    if k[j] != want {
                        return fail("radical normalization");
                    }
                }
                for i in 0..n {
                    let mut acc = Poly::zero(&vars);
                    for (j, kj) in k.iter().enumerate() {
                        acc = &acc + &(m.get(i, j) * kj);
                    }
                    if !acc.is_zero() {
                        return fail("radical vector not in the kernel");
                    }
                }
            }
            for a in 0..radical.len() {
                for b in a + 1..radical.len() {
                    if !poly_bracket(g, &radical[a], &radical[b]).iter().all(Poly::is_zero) {
                        return fail("radical is not abelian");
                    }
                }
            }
            for c in &s.constraints {
                if c.indices.len() != s.rank {
                    return fail("constraint size");
                }
                let form = m.principal_submatrix(&c.indices).pfaffian().map_err(|e| e.to_string())?;
                if form != c.form {
                    return fail("constraint is not the recorded Pfaffian");
                }
                let ok = match c.kind {
                    ConstraintKind::Linear => form.is_homogeneous(1),
                    ConstraintKind::Definite => matches!(
                        quadratic_definiteness(&form),
                        Ok(Definiteness::PositiveDefinite | Definiteness::NegativeDefinite)
                    ),
                    ConstraintKind::Semidefinite => matches!(semidefinite_zero_set(&form), Ok(Some(_))),
                };
                if !ok {
                    return fail("constraint kind");
                }
            }
            if s.rank == 0 {
                if s.child.is_some() {
                    return fail("rank 0 has no rank-drop locus");
                }
                continue;
            }
            if s.constraints.is_empty() {
                return fail("rank-drop locus is unbounded");
            }
            match (locus_bound(&s.constraints, r), s.child) {
                (None, None) => {}
                (Some(k), None) if k.is_zero() => {}
                (Some(k), Some(c)) if c > idx && c < self.strata.len() => {
                    let want = child_param(&s.param, &k);
                    let got = &self.strata[c].param;
                    let span = |p: &Matrix| Subspace::span(&p.transpose().row_vectors(), p.rows()).expect("rows");
                    if span(&want) != span(got) || got.cols() != want.cols() {
                        return fail("child does not parametrize the rank-drop bound");
                    }
                }
                _ => return fail("rank-drop locus is not covered"),
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::load;

    fn obstructed(name: &str) -> PencilCertificate {
        let g = load(name).unwrap();
        match pencil_obstruction(&g).unwrap() {
            PencilOutcome::Obstructed(c) => {
                c.replay(&g).unwrap();
                c
            }
            other => panic!("{name}: {other:?}"),
        }
    }

    #[test]
    fn l6_26_linear_locus() {
        let c = obstructed("L6_26");
        assert!(c.strata[0].constraints.iter().all(|k| k.kind == ConstraintKind::Linear));
    }

    #[test]
    fn l6_22_minus_one_definite() {
        let c = obstructed("L6_22(-1)");
        assert_eq!(c.strata.len(), 1);
        assert_eq!(c.strata[0].constraints[0].kind, ConstraintKind::Definite);
    }

    #[test]
    fn l6_24_minus_one_semidefinite() {
        let c = obstructed("L6_24(-1)");
        assert!(c.strata.len() >= 2);
        assert_eq!(c.strata[0].constraints[0].kind, ConstraintKind::Semidefinite);
    }

    #[test]
    fn l6_10_not_obstructed() {
        let g = load("L6_10").unwrap();
        let PencilOutcome::NotObstructed { psi, v1, v2 } = pencil_obstruction(&g).unwrap() else {
            panic!("expected a non-abelian radical");
        };
        assert!(crate::decomp::nonzero(&g.bracket_unchecked(&v1, &v2)));
        assert!(crate::decomp::nonzero(&psi));
    }

    #[test]
    fn tampered_certificate_rejected() {
        let g = load("L6_23").unwrap();
        let mut c = obstructed("L6_23");
        c.strata[0].rank += 2;
        assert!(c.replay(&g).is_err());
        let other = load("L6_10").unwrap();
        let c = obstructed("L6_23");
        assert!(c.replay(&other).is_err());
    }
}
