//! Independent reference computations for integration tests. Everything here
//! works on plain `BigRational` vectors with its own elimination code and
//! reads only the structure constants from the library.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use respect_core::exactlin::Scalar;
use respect_core::liealg::LieAlgebra;

pub type Q = BigRational;
pub type V = Vec<Q>;

pub fn q(s: &Scalar) -> Q {
    s.to_big()
}

pub fn qi(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

pub fn qv(v: &[Scalar]) -> V {
    v.iter().map(q).collect()
}

pub fn ints(v: &[i64]) -> V {
    v.iter().map(|&x| qi(x)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn unit(n: usize, i: usize) -> V {
    (0..n).map(|k| if k == i { Q::one() } else { Q::zero() }).collect()
}

/// Structure constants as dense bracket vectors.
pub struct Alg {
    pub n: usize,
    c: Vec<Vec<V>>,
}

impl Alg {
    pub fn of(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let c = (0..n).map(|i| (0..n).map(|j| qv(&g.bracket_basis(i, j))).collect()).collect();
        Alg { n, c }
    }

    pub fn br(&self, x: &[Q], y: &[Q]) -> V {
        let mut out = vec![Q::zero(); self.n];
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for (o, c) in out.iter_mut().zip(&self.c[i][j]) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    pub fn basis(&self) -> Vec<V> {
        (0..self.n).map(|i| unit(self.n, i)).collect()
    }

    pub fn brackets(&self, a: &[V], b: &[V]) -> Vec<V> {
        a.iter().flat_map(|x| b.iter().map(move |y| self.br(x, y))).collect()
    }

    pub fn derived(&self) -> Vec<V> {
        let b = self.basis();
        self.brackets(&b, &b)
    }

    /// Dimension of the centralizer of `t` inside the span of independent `s`.
    pub fn centralizer_dim(&self, s: &[V], t: &[V]) -> usize {
        let rows: Vec<V> = s.iter().map(|x| t.iter().flat_map(|y| self.br(x, y)).collect()).collect();
        s.len() - rank(&rows)
    }

    pub fn center(&self) -> Vec<V> {
        let b = self.basis();
        let mut rows: Vec<V> = Vec::new();
        for y in &b {
            let cols: Vec<V> = b.iter().map(|x| self.br(x, y)).collect();
            rows.extend((0..self.n).map(|k| cols.iter().map(|c| c[k].clone()).collect::<V>()));
        }
        kernel(&rows, self.n)
    }

    pub fn center_dim(&self) -> usize {
        let b = self.basis();
        self.centralizer_dim(&b, &b)
    }

    pub fn trace_ad(&self, x: &[Q]) -> Q {
        (0..self.n).map(|i| self.br(x, &unit(self.n, i))[i].clone()).sum()
    }

    /// Dimensions of `g, [g,g], [g,[g,g]], ...` until they stabilize.
    pub fn lower_central_dims(&self) -> Vec<usize> {
        let b = self.basis();
        let mut term = basis_of(&b);
        let mut dims = vec![term.len()];
        loop {
            let next = basis_of(&self.brackets(&b, &term));
            if next.len() == term.len() {
                return dims;
            }
            dims.push(next.len());
            term = next;
            if term.is_empty() {
                return dims;
            }
        }
    }
}

/// Reduced row echelon form: nonzero rows and their pivot columns.
pub fn rref(rows: &[V]) -> (Vec<V>, Vec<usize>) {
    let mut m: Vec<V> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..cols {
                    let d = &f * &m[r][k];
                    m[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[V]) -> usize {
    rref(rows).0.len()
}

pub fn basis_of(rows: &[V]) -> Vec<V> {
    rref(rows).0
}

pub fn in_span(rows: &[V], x: &[Q]) -> bool {
    let mut all = rows.to_vec();
    all.push(x.to_vec());
    rank(&all) == rank(rows)
}

pub fn span_contains(big: &[V], small: &[V]) -> bool {
    small.iter().all(|x| in_span(big, x))
}

pub fn same_span(a: &[V], b: &[V]) -> bool {
    span_contains(a, b) && span_contains(b, a)
}

/// Solutions `x` of `rows · x = 0`.
pub fn kernel(rows: &[V], n: usize) -> Vec<V> {
    let (r, pivots) = rref(rows);
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = unit(n, free);
            for (row, &p) in r.iter().zip(&pivots) {
                x[p] = -row[free].clone();
            }
            x
        })
        .collect()
}

/// Coordinates of `x` in the independent list `basis`.
pub fn coords(basis: &[V], x: &[Q]) -> Option<V> {
    let n = x.len();
    let k = basis.len();
    // Columns are basis vectors; augmented with x.
    let rows: Vec<V> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).chain(std::iter::once(x[i].clone())).collect())
        .collect();
    let (r, pivots) = rref(&rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut out = vec![Q::zero(); k];
    for (row, &p) in r.iter().zip(&pivots) {
        out[p] = row[k].clone();
    }
    Some(out)
}

pub fn combine(coeffs: &[Q], vs: &[V]) -> V {
    let n = vs.first().map_or(0, Vec::len);
    let mut out = vec![Q::zero(); n];
    for (c, v) in coeffs.iter().zip(vs) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// A split `g = H + V` seen through the merged basis `(H, V)`.
pub struct Split<'a> {
    pub a: &'a Alg,
    pub h: Vec<V>,
    pub v: Vec<V>,
}

impl<'a> Split<'a> {
    pub fn new(a: &'a Alg, h: Vec<V>, v: Vec<V>) -> Option<Self> {
        let mut all = h.clone();
        all.extend(v.iter().cloned());
        (rank(&all) == a.n && all.len() == a.n).then_some(Split { a, h, v })
    }

    fn parts(&self, x: &[Q]) -> (V, V) {
        let mut all = self.h.clone();
        all.extend(self.v.iter().cloned());
        let c = coords(&all, x).expect("spanning");
        let k = self.h.len();
        (c[..k].to_vec(), c[k..].to_vec())
    }

    pub fn pi_h(&self, x: &[Q]) -> V {
        combine(&self.parts(x).0, &self.h)
    }

    pub fn pi_v(&self, x: &[Q]) -> V {
        combine(&self.parts(x).1, &self.v)
    }

    /// Coordinates of `pi_V x` in the chosen `V` basis.
    pub fn v_coords(&self, x: &[Q]) -> V {
        self.parts(x).1
    }

    pub fn respects(&self) -> bool {
        span_contains(&self.h, &self.a.brackets(&self.v, &self.h))
    }

    pub fn mutual(&self) -> bool {
        self.respects() && span_contains(&self.v, &self.a.brackets(&self.h, &self.v))
    }

    pub fn h_subalgebra(&self) -> bool {
        span_contains(&self.h, &self.a.brackets(&self.h, &self.h))
    }

    pub fn v_subalgebra(&self) -> bool {
        span_contains(&self.v, &self.a.brackets(&self.v, &self.v))
    }

    pub fn open_respectful(&self) -> bool {
        self.respects() && !self.h_subalgebra() && !self.v_subalgebra()
    }

    /// `(dim, derived dim, center dim)` of the induced algebra on `V`.
    pub fn induced_dims(&self) -> (usize, usize, usize) {
        let k = self.v.len();
        let br = |i: usize, j: usize| self.v_coords(&self.a.br(&self.v[i], &self.v[j]));
        let derived: Vec<V> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| br(i, j)).collect();
        let center_rows: Vec<V> = (0..k).map(|i| (0..k).flat_map(|j| br(i, j)).collect()).collect();
        (k, rank(&derived), k - rank(&center_rows))
    }

    /// `H + pi_V [H, H]`.
    pub fn hbar(&self) -> Vec<V> {
        let mut all = self.h.clone();
        all.extend(self.a.brackets(&self.h, &self.h).iter().map(|x| self.pi_v(x)));
        basis_of(&all)
    }

    pub fn induced_abelian(&self) -> bool {
        self.induced_dims().1 == 0
    }
}

/// `(dim, derived dim, center dim)` of the subalgebra spanned by `s`.
pub fn sub_dims(a: &Alg, s: &[V]) -> (usize, usize, usize) {
    let s = basis_of(s);
    (s.len(), rank(&a.brackets(&s, &s)), a.centralizer_dim(&s, &s))
}

/// Type label of a small nilpotent algebra from its dimension counts.
pub fn type_label(dims: (usize, usize, usize)) -> &'static str {
    match dims {
        (3, 0, 3) => "R^3",
        (3, 1, 1) => "h3",
        (4, 2, 1) => "f4",
        (4, 1, 2) => "R+h3",
        (4, 0, 4) => "R^4",
        _ => "other",
    }
}

pub fn abs_height(v: &[Q]) -> Q {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
}
