use super::LieAlgebra;
use crate::exactlin::{unit_vector, Vector};

/// `g1 + g2` with block-diagonal structure constants. When the two name lists
/// overlap, every name of `g1` gets suffix `1` and every name of `g2` suffix
/// `2`.
pub fn direct_sum(g1: &LieAlgebra, g2: &LieAlgebra) -> LieAlgebra {
    let (n1, n2) = (g1.dim(), g2.dim());
    let clash = g1.basis_names().iter().any(|a| g2.index_of(a).is_some());
    let mut names: Vec<String> = Vec::with_capacity(n1 + n2);
    for s in g1.basis_names() {
        names.push(if clash { format!("{s}1") } else { s.clone() });
    }
    for s in g2.basis_names() {
        names.push(if clash { format!("{s}2") } else { s.clone() });
    }
    let n = n1 + n2;
    let embed = |w: &Vector, off: usize| -> Vector {
        let mut out = vec![Default::default(); n];
        for (k, c) in w.iter().enumerate() {
            out[k + off] = c.clone();
        }
        out
    };
    let mut rels = Vec::new();
    for (i, j, w) in g1.relations() {
        rels.push((i, j, embed(&w, 0)));
    }
    for (i, j, w) in g2.relations() {
        rels.push((i + n1, j + n1, embed(&w, n1)));
    }
    LieAlgebra::new(format!("{}+{}", g1.name(), g2.name()), names, &rels)
        .expect("direct sum of valid algebras is well formed")
}

/// Heisenberg algebra of dimension `2n + 1`: `[x_i, y_i] = z`. Basis order is
/// `x1, y1, ..., xn, yn, z`; for `n = 1` the names are `x, y, z`.
pub fn heisenberg(n: usize) -> LieAlgebra {
    assert!(n >= 1);
    let d = 2 * n + 1;
    let mut names = Vec::with_capacity(d);
    for i in 1..=n {
        if n == 1 {
            names.extend(["x".to_string(), "y".to_string()]);
        } else {
            names.extend([format!("x{i}"), format!("y{i}")]);
        }
    }
    names.push("z".into());
    let rels: Vec<_> = (0..n)
        .map(|i| (2 * i, 2 * i + 1, unit_vector(d, d - 1)))
        .collect();
    LieAlgebra::new(format!("h{d}"), names, &rels).expect("well formed")
}

/// `[x1, x2] = x3`, `[x1, x3] = x4`.
pub fn filiform_f4() -> LieAlgebra {
    LieAlgebra::new(
        "f4",
        (1..=4).map(|i| format!("x{i}")).collect(),
        &[(0, 1, unit_vector(4, 2)), (0, 2, unit_vector(4, 3))],
    )
    .expect("well formed")
}

/// Abelian algebra with basis `e1, ..., en`.
pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::new(format!("R{n}"), (1..=n).map(|i| format!("e{i}")).collect(), &[])
        .expect("well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h3_plus_h3() {
        let g = direct_sum(&heisenberg(1), &heisenberg(1));
        assert_eq!(g.dim(), 6);
        assert_eq!(g.basis_names(), ["x1", "y1", "z1", "x2", "y2", "z2"]);
        assert_eq!(g.bracket_basis(0, 1), unit_vector(6, 2));
        assert_eq!(g.bracket_basis(3, 4), unit_vector(6, 5));
        assert_eq!(g.relations().len(), 2);
        assert!(g.validate().ok());
    }

    #[test]
    fn abelian_sum() {
        assert!(direct_sum(&abelian(2), &abelian(3)).same_structure(&abelian(5)));
    }

    #[test]
    fn r_plus_h5() {
        let r = LieAlgebra::new("R", vec!["w".into()], &[]).unwrap();
        let g = direct_sum(&heisenberg(2), &r);
        assert_eq!(g.basis_names(), ["x1", "y1", "x2", "y2", "z", "w"]);
        assert_eq!(g.center().dim(), 2);
        assert_eq!(g.derived().dim(), 1);
    }
}
