use std::collections::HashMap;
use std::sync::Arc;

use super::{Poly, PolyError};
use crate::exactlin::{Matrix, Scalar};

/// Square matrix of polynomials over a shared variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymMatrix {
    n: usize,
    vars: Arc<[String]>,
    entries: Vec<Poly>,
    antisymmetric: bool,
}

impl SymMatrix {
    /// Builds from rows. With `antisymmetric` set, `m[i][j] = -m[j][i]` and a
    /// zero diagonal are verified.
    pub fn new(vars: &Arc<[String]>, rows: Vec<Vec<Poly>>, antisymmetric: bool) -> Result<Self, PolyError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(PolyError::NotSquare);
            }
            for p in &row {
                if p.variables() != vars {
                    return Err(PolyError::VariableMismatch {
                        left: vars.to_vec(),
                        right: p.variables().to_vec(),
                    });
                }
            }
            entries.extend(row);
        }
        let m = SymMatrix {
            n,
            vars: vars.clone(),
            entries,
            antisymmetric,
        };
        if antisymmetric {
            for i in 0..n {
                for j in i..n {
                    if *m.get(i, j) != m.get(j, i).neg() {
                        return Err(PolyError::NotAntisymmetric(i, j));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Antisymmetric matrix from a function giving entries above the diagonal.
    pub fn antisymmetric_from(vars: &Arc<[String]>, n: usize, mut upper: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = vec![Poly::zero(vars); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let p = upper(i, j);
                entries[j * n + i] = p.neg();
                entries[i * n + j] = p;
            }
        }
        SymMatrix {
            n,
            vars: vars.clone(),
            entries,
            antisymmetric: true,
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn variables(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetric
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.n + j]
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> SymMatrix {
        let mut entries = Vec::with_capacity(idx.len() * idx.len());
        for &i in idx {
            for &j in idx {
                entries.push(self.get(i, j).clone());
            }
        }
        SymMatrix {
            n: idx.len(),
            vars: self.vars.clone(),
            entries,
            antisymmetric: self.antisymmetric,
        }
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Matrix, PolyError> {
        let vals: Vec<Scalar> = self
            .entries
            .iter()
            .map(|p| p.evaluate(point))
            .collect::<Result<_, _>>()?;
        Ok(Matrix::from_fn(self.n, self.n, |i, j| vals[i * self.n + j].clone()))
    }

    /// Row `i` is identically zero.
    pub fn row_is_zero(&self, i: usize) -> bool {
        (0..self.n).all(|j| self.get(i, j).is_zero())
    }

    /// Pfaffian by expansion along the first row:
    /// `Pf(A) = sum_j (-1)^(j-1) a_{0j} Pf(A without rows/cols 0, j)`.
    pub fn pfaffian(&self) -> Result<Poly, PolyError> {
        if !self.antisymmetric {
            for i in 0..self.n {
                for j in i..self.n {
                    if *self.get(i, j) != self.get(j, i).neg() {
                        return Err(PolyError::NotAntisymmetric(i, j));
                    }
                }
            }
        }
        if self.n % 2 == 1 {
            return Err(PolyError::OddDimension);
        }
        let idx: Vec<usize> = (0..self.n).collect();
        Ok(self.pf_rec(&idx))
    }

    fn pf_rec(&self, idx: &[usize]) -> Poly {
        if idx.is_empty() {
            return Poly::constant(&self.vars, Scalar::one());
        }
        let first = idx[0];
        let mut out = Poly::zero(&self.vars);
        for k in 1..idx.len() {
            let a = self.get(first, idx[k]);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx[1..]
                .iter()
                .enumerate()
                .filter(|(p, _)| p + 1 != k)
                .map(|(_, &x)| x)
                .collect();
            let term = a * &self.pf_rec(&rest);
            out = if k % 2 == 1 { &out + &term } else { &out - &term };
        }
        out
    }

    /// Determinant by cofactor expansion along successive rows, memoized on
    /// the set of remaining columns.
    pub fn determinant(&self) -> Poly {
        assert!(self.n <= 30, "determinant size limit");
        let mut memo = HashMap::new();
        let full: u32 = if self.n == 0 { 0 } else { (1u32 << self.n) - 1 };
        self.det_rec(full, &mut memo)
    }

    fn det_rec(&self, mask: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
        if mask == 0 {
            return Poly::constant(&self.vars, Scalar::one());
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let row = self.n - mask.count_ones() as usize;
        let mut out = Poly::zero(&self.vars);
        let mut pos = 0;
        for j in 0..self.n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let a = self.get(row, j);
            if !a.is_zero() {
                let term = a * &self.det_rec(mask & !(1 << j), memo);
                out = if pos % 2 == 0 { &out + &term } else { &out - &term };
            }
            pos += 1;
        }
        memo.insert(mask, out.clone());
        out
    }

    /// Adjugate matrix, so that `M * adj(M) = det(M) I`.
    pub fn adjugate(&self) -> Vec<Vec<Poly>> {
        let n = self.n;
        let mut adj = vec![vec![Poly::zero(&self.vars); n]; n];
        if n == 1 {
            adj[0][0] = Poly::constant(&self.vars, Scalar::one());
            return adj;
        }
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let mut entries = Vec::with_capacity((n - 1) * (n - 1));
                for &r in &rows {
                    for &c in &cols {
                        entries.push(self.get(r, c).clone());
                    }
                }
                let minor = SymMatrix {
                    n: n - 1,
                    vars: self.vars.clone(),
                    entries,
                    antisymmetric: false,
                };
                let d = minor.determinant();
                adj[i][j] = if (i + j) % 2 == 0 { d } else { d.neg() };
            }
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympoly::variables;
    use proptest::prelude::*;

    #[test]
    fn pfaffian_2x2() {
        let v = variables(&["a"]);
        let a = Poly::var(&v, 0);
        let m = SymMatrix::antisymmetric_from(&v, 2, |_, _| a.clone());
        assert_eq!(m.pfaffian().unwrap(), a);
    }

    #[test]
    fn pfaffian_4x4_formula() {
        // Pf = m12 m34 - m13 m24 + m14 m23 with m12=a, m34=0, m13=b,
        // m24=-b, m14=-c, m23=c gives b^2 - c^2.
        let v = variables(&["a", "b", "c"]);
        let (a, b, c) = (Poly::var(&v, 0), Poly::var(&v, 1), Poly::var(&v, 2));
        let m = SymMatrix::antisymmetric_from(&v, 4, |i, j| match (i, j) {
            (0, 1) => a.clone(),
            (0, 2) => b.clone(),
            (1, 3) => b.neg(),
            (0, 3) => c.neg(),
            (1, 2) => c.clone(),
            _ => Poly::zero(&v),
        });
        let pf = m.pfaffian().unwrap();
        assert_eq!(pf, &b.pow(2) - &c.pow(2));
        assert_eq!(pf.pow(2), m.determinant());
    }

    #[test]
    fn pfaffian_errors() {
        let v = variables(&["a"]);
        let a = Poly::var(&v, 0);
        let odd = SymMatrix::antisymmetric_from(&v, 3, |_, _| a.clone());
        assert_eq!(odd.pfaffian(), Err(PolyError::OddDimension));
        let z = Poly::zero(&v);
        let bad = SymMatrix::new(&v, vec![vec![z.clone(), a.clone()], vec![a.clone(), z]], false).unwrap();
        assert_eq!(bad.pfaffian(), Err(PolyError::NotAntisymmetric(0, 1)));
        let bad2 = SymMatrix::new(&v, vec![vec![Poly::zero(&v), a.clone()], vec![a.clone(), Poly::zero(&v)]], true);
        assert!(bad2.is_err());
    }

    #[test]
    fn adjugate_identity() {
        let v = variables(&["a", "b"]);
        let (a, b) = (Poly::var(&v, 0), Poly::var(&v, 1));
        let one = Poly::constant(&v, Scalar::one());
        let rows = vec![
            vec![a.clone(), b.clone(), one.clone()],
            vec![one.clone(), a.clone(), Poly::zero(&v)],
            vec![b.clone(), Poly::zero(&v), a.clone()],
        ];
        let m = SymMatrix::new(&v, rows, false).unwrap();
        let adj = m.adjugate();
        let det = m.determinant();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = Poly::zero(&v);
                for k in 0..3 {
                    s = &s + &(m.get(i, k) * &adj[k][j]);
                }
                let expect = if i == j { det.clone() } else { Poly::zero(&v) };
                assert_eq!(s, expect);
            }
        }
    }

    fn linear_antisym(n: usize, coeffs: &[i64]) -> SymMatrix {
        let v = variables(&["s", "t", "u"]);
        let mut k = 0;
        SymMatrix::antisymmetric_from(&v, n, |_, _| {
            let c: Vec<Scalar> = coeffs[k..k + 3].iter().map(|&x| Scalar::from_int(x)).collect();
            k += 3;
            Poly::linear(&v, &c)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn pfaffian_squared_is_determinant_symbolic(
            n in prop::sample::select(vec![2usize, 4, 6]),
            coeffs in prop::collection::vec(-2i64..=2, 45),
        ) {
            let m = linear_antisym(n, &coeffs);
            prop_assert_eq!(m.pfaffian().unwrap().pow(2), m.determinant());
        }

        #[test]
        fn pfaffian_squared_is_determinant_numeric(
            coeffs in prop::collection::vec(-3i64..=3, 45),
            pt in prop::collection::vec((-9i64..=9, 1i64..=5), 3),
        ) {
            let m = linear_antisym(6, &coeffs);
            let point: Vec<Scalar> = pt.iter().map(|&(p, q)| Scalar::new(p, q)).collect();
            let pf = m.pfaffian().unwrap().evaluate(&point).unwrap();
            let det = m.evaluate(&point).unwrap().determinant().unwrap();
            prop_assert_eq!(&pf * &pf, det);
        }
    }
}
