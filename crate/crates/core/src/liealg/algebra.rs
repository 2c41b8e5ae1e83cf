use std::collections::HashSet;

use serde::Serialize;

use super::{is_valid_name, LieError};
use crate::exactlin::{is_zero_vector, unit_vector, zero_vector, LinalgError, Matrix, Scalar, Subspace, Vector};

/// Finite-dimensional Lie algebra over Q presented by structure constants
/// `[e_i, e_j] = sum_k c_ij^k e_k`.
///
/// Only pairs `i < j` are supplied; the full antisymmetric table is built at
/// construction.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    names: Vec<String>,
    // table[i * n + j]: sparse [e_i, e_j]
    table: Vec<Vec<(usize, Scalar)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobiReport {
    pub triples_checked: usize,
    pub violation: Option<JacobiViolation>,
}

impl JacobiReport {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub derived_series: Vec<Subspace>,
    pub lower_central_series: Vec<Subspace>,
    pub center: Subspace,
    pub nilpotency_class: Option<usize>,
}

fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

impl LieAlgebra {
    /// Builds an algebra from relations `[e_i, e_j] = w`. Pairs with `i > j`
    /// are stored as `[e_j, e_i] = -w`. Jacobi is not checked here; see
    /// [`LieAlgebra::validate`].
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        relations: &[(usize, usize, Vector)],
    ) -> Result<Self, LieError> {
        let n = names.len();
        let mut seen = HashSet::new();
        for s in &names {
            if !is_valid_name(s) {
                return Err(LieError::InvalidName(s.clone()));
            }
            if !seen.insert(s.as_str()) {
                return Err(LieError::DuplicateName(s.clone()));
            }
        }
        let mut table = vec![Vec::new(); n * n];
        let mut given = HashSet::new();
        for (i, j, w) in relations {
            let (i, j) = (*i, *j);
            if i >= n || j >= n {
                return Err(LieError::IndexOutOfRange(i.max(j)));
            }
            if w.len() != n {
                return Err(LinalgError::DimensionMismatch {
                    expected: n,
                    found: w.len(),
                }
                .into());
            }
            if i == j {
                if is_zero_vector(w) {
                    continue;
                }
                return Err(LieError::SelfBracket(names[i].clone()));
            }
            let (a, b, w) = if i < j {
                (i, j, w.clone())
            } else {
                (j, i, w.iter().map(|c| -c).collect())
            };
            if !given.insert((a, b)) {
                return Err(LieError::DuplicateBracket(names[a].clone(), names[b].clone()));
            }
            let neg: Vector = w.iter().map(|c| -c).collect();
            table[a * n + b] = sparse(&w);
            table[b * n + a] = sparse(&neg);
        }
        Ok(LieAlgebra {
            name: name.into(),
            names,
            table,
        })
    }

    /// Convenience constructor with integer relations given by basis names.
    pub fn from_int_relations(name: &str, names: &[&str], relations: &[(&str, &str, &[(i64, &str)])]) -> Result<Self, LieError> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let idx = |s: &str| {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| LieError::InvalidName(s.to_string()))
        };
        let n = names.len();
        let mut rels = Vec::new();
        for (a, b, terms) in relations {
            let mut w = zero_vector(n);
            for (c, t) in terms.iter() {
                w[idx(t)?] += &Scalar::from_int(*c);
            }
            rels.push((idx(a)?, idx(b)?, w));
        }
        LieAlgebra::new(name, names.clone(), &rels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    /// Sparse `[e_i, e_j]`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vector(self.dim());
        for (k, c) in self.structure_constants(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// Nonzero relations `[e_i, e_j] = w` with `i < j`, in index order.
    pub fn relations(&self) -> Vec<(usize, usize, Vector)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.structure_constants(i, j).is_empty() {
                    out.push((i, j, self.bracket_basis(i, j)));
                }
            }
        }
        out
    }

    /// Same structure constants, ignoring names.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.table == other.table
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector, LieError> {
        let n = self.dim();
        for x in [u, v] {
            if x.len() != n {
                return Err(LinalgError::DimensionMismatch {
                    expected: n,
                    found: x.len(),
                }
                .into());
            }
        }
        Ok(self.bracket_unchecked(u, v))
    }

    /// Bracket of coordinate vectors; lengths must equal `dim`.
    pub fn bracket_unchecked(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let sc = &self.table[i * n + j];
                if sc.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in sc {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Checks Jacobi on every basis triple `i < j < k` and reports the first
    /// failure with its residual.
    pub fn validate(&self) -> JacobiReport {
        let n = self.dim();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    count += 1;
                    let r = self.jacobi_residual(&unit_vector(n, i), &unit_vector(n, j), &unit_vector(n, k));
                    if !is_zero_vector(&r) {
                        return JacobiReport {
                            triples_checked: count,
                            violation: Some(JacobiViolation {
                                triple: (i, j, k),
                                residual: r,
                            }),
                        };
                    }
                }
            }
        }
        JacobiReport {
            triples_checked: count,
            violation: None,
        }
    }

    /// `[u,[v,w]] + [v,[w,u]] + [w,[u,v]]`.
    pub fn jacobi_residual(&self, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Vector {
        let a = self.bracket_unchecked(u, &self.bracket_unchecked(v, w));
        let b = self.bracket_unchecked(v, &self.bracket_unchecked(w, u));
        let c = self.bracket_unchecked(w, &self.bracket_unchecked(u, v));
        a.iter().zip(&b).zip(&c).map(|((x, y), z)| &(x + y) + z).collect()
    }

    /// `Sp{[a, b] : a in A, b in B}`.
    pub fn subspace_bracket(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let n = self.dim();
        let bb = b.basis_vectors();
        let mut vs = Vec::new();
        for x in a.basis_vectors() {
            for y in &bb {
                let z = self.bracket_unchecked(&x, y);
                if !is_zero_vector(&z) {
                    vs.push(z);
                }
            }
        }
        Subspace::span(&vs, n).expect("bracket vectors have ambient length")
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn derived(&self) -> Subspace {
        let g = self.full();
        self.subspace_bracket(&g, &g)
    }

    /// Matrix of `x -> [v, x]`.
    pub fn ad_matrix(&self, v: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let mut col = zero_vector(n);
            for (i, a) in v.iter().enumerate() {
                if !a.is_zero() {
                    for (k, c) in self.structure_constants(i, j) {
                        col[*k] += &(a * c);
                    }
                }
            }
            for (k, c) in col.into_iter().enumerate() {
                m[(k, j)] = c;
            }
        }
        m
    }

    pub fn trace_ad(&self, v: &[Scalar]) -> Scalar {
        self.ad_matrix(v).trace()
    }

    pub fn is_unimodular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| self.trace_ad(&unit_vector(n, i)).is_zero())
    }

    /// `{x : [x, s] = 0 for all s in S}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for v in s.basis_vectors() {
            rows.extend(self.ad_matrix(&v).row_vectors());
        }
        if rows.is_empty() {
            return self.full();
        }
        Subspace::kernel(&Matrix::from_rows(&rows, n).expect("square ad matrices"))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.full())
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains(&self.subspace_bracket(s, s))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains(&self.subspace_bracket(&self.full(), s))
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut out = vec![self.full()];
        loop {
            let last = out.last().expect("nonempty");
            let next = self.subspace_bracket(last, last);
            if next == *last {
                break;
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                break;
            }
        }
        out
    }

    /// `g, [g,g], [g,[g,g]], ...` until it stabilizes (at 0 when nilpotent).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let g = self.full();
        let mut out = vec![g.clone()];
        loop {
            let last = out.last().expect("nonempty");
            let next = self.subspace_bracket(&g, last);
            if next == *last {
                break;
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                break;
            }
        }
        out
    }

    /// `g^k` with `g^1 = g`, `g^{k+1} = [g, g^k]`.
    pub fn lower_central_term(&self, k: usize) -> Subspace {
        let g = self.full();
        let mut s = g.clone();
        for _ in 1..k {
            s = self.subspace_bracket(&g, &s);
        }
        s
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        let lcs = self.lower_central_series();
        lcs.last().expect("nonempty").is_zero().then(|| lcs.len() - 1)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    pub fn series(&self) -> SeriesReport {
        let lower_central_series = self.lower_central_series();
        let nilpotency_class = lower_central_series
            .last()
            .expect("nonempty")
            .is_zero()
            .then(|| lower_central_series.len() - 1);
        SeriesReport {
            derived_series: self.derived_series(),
            lower_central_series,
            center: self.center(),
            nilpotency_class,
        }
    }

    /// A nilpotent algebra is filiform when its class is `dim - 1`.
    pub fn is_filiform(&self) -> Result<bool, LieError> {
        let c = self.nilpotency_class().ok_or(LieError::NotNilpotent)?;
        Ok(self.dim() >= 3 && c == self.dim() - 1)
    }

    /// Some `X` with `ad(X)^{n-2} != 0`, searched over basis vectors and then
    /// small integer combinations.
    pub fn filiform_witness(&self) -> Option<Vector> {
        let n = self.dim();
        if n < 3 {
            return None;
        }
        let works = |x: &Vector| {
            let ad = self.ad_matrix(x);
            let mut p = ad.clone();
            for _ in 1..n - 2 {
                p = p.mul(&ad).expect("square");
            }
            !p.is_zero()
        };
        for i in 0..n {
            let x = unit_vector(n, i);
            if works(&x) {
                return Some(x);
            }
        }
        let coeffs = [0i64, 1, -1, 2];
        let total = coeffs.len().pow(n as u32);
        (0..total.min(1 << 16)).find_map(|mut code| {
            let x: Vector = (0..n)
                .map(|_| {
                    let c = coeffs[code % coeffs.len()];
                    code /= coeffs.len();
                    Scalar::from_int(c)
                })
                .collect();
            (!is_zero_vector(&x) && works(&x)).then_some(x)
        })
    }

    /// Algebra on an explicit basis of a subspace `S` with bracket
    /// `coords([b_i, b_j])`, where `coords` returns coordinates relative to
    /// that basis (after any projection the caller wants).
    pub fn algebra_on_basis(
        &self,
        name: &str,
        names: Vec<String>,
        basis: &[Vector],
        mut coords: impl FnMut(&Vector) -> Vector,
    ) -> Result<LieAlgebra, LieError> {
        let k = basis.len();
        let mut rels = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let w = coords(&self.bracket_unchecked(&basis[i], &basis[j]));
                if !is_zero_vector(&w) {
                    rels.push((i, j, w));
                }
            }
        }
        LieAlgebra::new(name, names, &rels)
    }

    /// Structure of a subalgebra on its canonical basis, with basis names
    /// `s1, s2, ...`.
    pub fn subalgebra_structure(&self, s: &Subspace) -> Result<LieAlgebra, LieError> {
        if !self.is_subalgebra(s) {
            return Err(LieError::NotSubalgebra);
        }
        let names = (1..=s.dim()).map(|i| format!("s{i}")).collect();
        self.algebra_on_basis(&format!("{}|sub", self.name), names, &s.basis_vectors(), |w| {
            s.coordinates(w).expect("closed under bracket")
        })
    }

    /// Quotient by an ideal, realized on the deterministic complement of the
    /// ideal with basis names `q1, q2, ...`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra, LieError> {
        if !self.is_ideal(ideal) {
            return Err(LieError::NotIdeal);
        }
        let pi = ideal.quotient_map();
        let comp = ideal.complement(&self.full())?;
        let basis = comp.basis_vectors();
        // pi restricted to the complement is invertible.
        let images: Vec<Vector> = basis.iter().map(|b| pi.apply(b).expect("dims")).collect();
        let m = Matrix::from_rows(&images, pi.rows())?.transpose();
        let inv = m.inverse()?;
        let names = (1..=comp.dim()).map(|i| format!("q{i}")).collect();
        self.algebra_on_basis(&format!("{}|quot", self.name), names, &basis, |w| {
            inv.apply(&pi.apply(w).expect("dims")).expect("dims")
        })
    }

    /// `x -> sum_i c_i e_i` as a readable expression like `x2 + x3`.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        crate::format::format_linear_combination(v, &self.names)
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra({}; ", self.name)?;
        let rels: Vec<String> = self
            .relations()
            .iter()
            .map(|(i, j, w)| format!("[{},{}]={}", self.names[*i], self.names[*j], self.format_vector(w)))
            .collect();
        write!(f, "{})", rels.join(", "))
    }
}
