//! Arithmetic modulo a 31-bit prime, used to filter search candidates before
//! exact verification. A subspace spanned by integer vectors keeps its
//! dimension mod p unless p divides every maximal minor, so the filter only
//! ever loses candidates with negligible probability and never admits a
//! false witness (every hit is re-checked over the rationals).

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::exactlin::Scalar;
use crate::liealg::LieAlgebra;

pub(crate) const P: u64 = 2_147_483_647;

/// Largest dimension the fast kernel handles.
pub(crate) const MAXN: usize = 12;

/// A vector mod p; entries past the ambient dimension stay zero.
pub(crate) type Vm = [u64; MAXN];

#[inline]
pub(crate) fn mul(a: u64, b: u64) -> u64 {
    // P = 2^31 - 1: fold the high bits twice.
    let x = a * b;
    let x = (x & P) + (x >> 31);
    let x = (x & P) + (x >> 31);
    if x >= P {
        x - P
    } else {
        x
    }
}

#[inline]
pub(crate) fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

pub(crate) fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    let (mut base, mut e, mut r) = (a, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    r
}

pub(crate) fn from_i64(x: i64) -> u64 {
    x.rem_euclid(P as i64) as u64
}

fn from_bigint(x: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let r = ((x % &p) + &p) % &p;
    debug_assert!(!r.is_negative());
    r.to_u64().expect("reduced below p")
}

/// `None` when the denominator vanishes mod p.
pub(crate) fn from_scalar(s: &Scalar) -> Option<u64> {
    let d = from_bigint(&s.denom());
    (d != 0).then(|| mul(from_bigint(&s.numer()), inv(d)))
}

pub(crate) fn from_ints(v: &[i64]) -> Vm {
    let mut out = [0u64; MAXN];
    for (o, &x) in out.iter_mut().zip(v) {
        *o = from_i64(x);
    }
    out
}

pub(crate) fn is_zero(v: &Vm) -> bool {
    v.iter().all(|&x| x == 0)
}

/// Structure constants reduced mod p as `(i, j, k, c)` with `i < j` and
/// `[e_i, e_j]` having coefficient `c` on `e_k`.
pub(crate) struct ModpAlgebra {
    n: usize,
    consts: Vec<(usize, usize, usize, u64)>,
}

impl ModpAlgebra {
    /// `None` if the dimension exceeds `MAXN` or a denominator vanishes mod p.
    pub(crate) fn new(g: &LieAlgebra) -> Option<Self> {
        let n = g.dim();
        if n > MAXN {
            return None;
        }
        let mut consts = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for (k, c) in g.structure_constants(i, j) {
                    consts.push((i, j, *k, from_scalar(c)?));
                }
            }
        }
        Some(ModpAlgebra { n, consts })
    }

    pub(crate) fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn bracket(&self, a: &Vm, b: &Vm) -> Vm {
        let mut out = [0u64; MAXN];
        for &(i, j, k, c) in &self.consts {
            let t = sub(mul(a[i], b[j]), mul(a[j], b[i]));
            if t != 0 {
                out[k] = add(out[k], mul(t, c));
            }
        }
        out
    }
}

/// Row echelon basis mod p with normalized pivots, stored inline.
#[derive(Clone)]
pub(crate) struct Echelon {
    n: usize,
    len: usize,
    pivots: [usize; MAXN],
    rows: [Vm; MAXN],
}

impl Echelon {
    pub(crate) fn new(n: usize) -> Self {
        Echelon { n, len: 0, pivots: [0; MAXN], rows: [[0; MAXN]; MAXN] }
    }

    pub(crate) fn dim(&self) -> usize {
        self.len
    }

    pub(crate) fn reduce(&self, v: &Vm) -> Vm {
        let mut w = *v;
        for r in 0..self.len {
            let c = w[self.pivots[r]];
            if c != 0 {
                let row = &self.rows[r];
                for k in 0..self.n {
                    if row[k] != 0 {
                        w[k] = sub(w[k], mul(c, row[k]));
                    }
                }
            }
        }
        w
    }

    pub(crate) fn contains(&self, v: &Vm) -> bool {
        is_zero(&self.reduce(v))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub(crate) fn insert(&mut self, v: &Vm) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w[..self.n].iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(w[p]);
        for x in w[..self.n].iter_mut() {
            *x = mul(*x, s);
        }
        for r in 0..self.len {
            let c = self.rows[r][p];
            if c != 0 {
                for k in 0..self.n {
                    self.rows[r][k] = sub(self.rows[r][k], mul(c, w[k]));
                }
            }
        }
        let pos = self.pivots[..self.len].partition_point(|&q| q < p);
        for r in (pos..self.len).rev() {
            self.pivots[r + 1] = self.pivots[r];
            self.rows[r + 1] = self.rows[r];
        }
        self.pivots[pos] = p;
        self.rows[pos] = w;
        self.len += 1;
        true
    }

    /// Canonical form (reduced echelon rows in pivot order), usable as a key.
    pub(crate) fn key(&self) -> Vec<u64> {
        self.rows[..self.len].iter().flat_map(|r| r[..self.n].iter().copied()).collect()
    }

    pub(crate) fn rows(&self) -> impl Iterator<Item = &Vm> {
        self.rows[..self.len].iter()
    }
}
