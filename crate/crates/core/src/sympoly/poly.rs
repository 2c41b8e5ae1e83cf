use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::PolyError;
use crate::exactlin::Scalar;

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial with rational coefficients over a named, ordered
/// variable list. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(vars: &Arc<[String]>) -> Self {
        Poly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<[String]>, c: Scalar) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    /// The variable at position `i`.
    pub fn var(vars: &Arc<[String]>, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Poly::zero(vars);
        p.terms.insert(Monomial(e), Scalar::one());
        p
    }

    pub fn var_named(vars: &Arc<[String]>, name: &str) -> Result<Self, PolyError> {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Poly::var(vars, i))
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(vars: &Arc<[String]>, coeffs: &[Scalar]) -> Self {
        assert_eq!(coeffs.len(), vars.len());
        let mut p = Poly::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; vars.len()];
                e[i] = 1;
                p.terms.insert(Monomial(e), c.clone());
            }
        }
        p
    }

    pub fn variables(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficients of a homogeneous linear form.
    pub fn linear_coefficients(&self) -> Option<Vec<Scalar>> {
        if !self.is_homogeneous(1) {
            return None;
        }
        let mut out = vec![Scalar::zero(); self.nvars()];
        for (m, c) in &self.terms {
            let i = m.0.iter().position(|&e| e == 1).expect("degree one");
            out[i] = c.clone();
        }
        Some(out)
    }

    fn same_ring(&self, other: &Poly) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            })
        }
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_ring(other)?;
        let mut out = Poly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::constant(&self.vars, Scalar::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut t = c.clone();
                for (x, &e) in point.iter().zip(&m.0) {
                    if e > 0 {
                        t *= &x.pow(e);
                    }
                }
                t
            })
            .sum())
    }

    /// Replaces variable `name` by `value`, which must live in the same ring.
    pub fn substitute(&self, name: &str, value: &Poly) -> Result<Poly, PolyError> {
        self.same_ring(value)?;
        let i = self
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let images: Vec<Poly> = (0..self.nvars())
            .map(|j| {
                if j == i {
                    value.clone()
                } else {
                    Poly::var(&self.vars, j)
                }
            })
            .collect();
        self.compose(&images, &self.vars)
    }

    /// Replaces variable `name` by a constant.
    pub fn substitute_scalar(&self, name: &str, value: &Scalar) -> Result<Poly, PolyError> {
        self.substitute(name, &Poly::constant(&self.vars, value.clone()))
    }

    /// Substitutes `images[i]` (polynomials over `new_vars`) for variable `i`.
    pub fn compose(&self, images: &[Poly], new_vars: &Arc<[String]>) -> Result<Poly, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars(),
                found: images.len(),
            });
        }
        let target = Poly::zero(new_vars);
        for im in images {
            target.same_ring(im)?;
        }
        let mut out = target;
        for (m, c) in &self.terms {
            let mut t = Poly::constant(new_vars, c.clone());
            for (im, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &im.pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }
}

macro_rules! checked_op {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl std::ops::$trait<&Poly> for &Poly {
            type Output = Poly;
            /// Panics if the operands use different variable lists.
            fn $method(self, rhs: &Poly) -> Poly {
                self.$inner(rhs).expect("polynomials over different variables")
            }
        }
    };
}

checked_op!(Add, add, try_add);
checked_op!(Sub, sub, try_sub);
checked_op!(Mul, mul, try_mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .zip(self.vars.iter())
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shared variable list from names.
pub fn variables<S: AsRef<str>>(names: &[S]) -> Arc<[String]> {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> (Arc<[String]>, Poly, Poly) {
        let v = variables(&["a", "b"]);
        let a = Poly::var(&v, 0);
        let b = Poly::var(&v, 1);
        (v, a, b)
    }

    #[test]
    fn difference_of_squares() {
        let (_, a, b) = ab();
        let p = &(&a + &b) * &(&a - &b);
        assert_eq!(p, &a.pow(2) - &b.pow(2));
        assert_eq!(p.to_string(), "a^2 - b^2");
    }

    #[test]
    fn substitution() {
        let (_, a, b) = ab();
        let p = &a.pow(2) + &b.pow(2);
        assert_eq!(p.substitute_scalar("b", &Scalar::zero()).unwrap(), a.pow(2));
        assert_eq!(p.substitute("a", &b).unwrap(), b.pow(2).scale(&Scalar::from_int(2)));
        assert!(matches!(
            p.substitute_scalar("c", &Scalar::one()),
            Err(PolyError::UnknownVariable(_))
        ));
    }

    #[test]
    fn evaluate_mu_eps() {
        let v = variables(&["mu1", "mu2", "eps"]);
        let mu1 = Poly::var(&v, 0);
        let mu2 = Poly::var(&v, 1);
        let eps = Poly::var(&v, 2);
        let p = &mu2.pow(2) - &(&eps * &mu1.pow(2));
        let pt = [Scalar::one(), Scalar::zero(), Scalar::zero()];
        assert_eq!(p.evaluate(&pt).unwrap(), Scalar::zero());
        let pt = [Scalar::from_int(2), Scalar::from_int(1), Scalar::from_int(-1)];
        assert_eq!(p.evaluate(&pt).unwrap(), Scalar::from_int(5));
    }

    #[test]
    fn mismatched_rings() {
        let (_, a, _) = ab();
        let w = variables(&["x"]);
        let x = Poly::var(&w, 0);
        assert!(matches!(a.try_add(&x), Err(PolyError::VariableMismatch { .. })));
    }

    #[test]
    fn grlex_display_order() {
        let (v, a, b) = ab();
        let p = &(&b + &a.pow(2)) + &Poly::constant(&v, Scalar::new(-1, 2));
        assert_eq!(p.to_string(), "a^2 + b - 1/2");
        assert_eq!(p.degree(), Some(2));
    }
}
