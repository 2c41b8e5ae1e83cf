//! Plain-text algebra files and linear-combination syntax.
//!
//! ```text
//! algebra L6_10
//! dim 6
//! basis x1 x2 x3 x4 x5 x6
//! bracket x1 x2 = x3
//! bracket x1 x3 = x6
//! bracket x4 x5 = x6
//! ```
//!
//! `#` starts a comment. Brackets not listed are zero. Coefficients are exact
//! rationals written `c*x` with `c` an integer or `p/q`.

use crate::exactlin::{zero_vector, Scalar, Vector};
use crate::liealg::{is_valid_name, JacobiViolation, LieAlgebra, LieError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid linear combination {text:?}: {message}")]
    Vector { text: String, message: String },
    #[error("Jacobi identity fails on ({a}, {b}, {c}), residual {residual}")]
    Jacobi {
        a: String,
        b: String,
        c: String,
        residual: String,
        violation: JacobiViolation,
    },
    #[error(transparent)]
    Algebra(#[from] LieError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Canonical rendering: terms in basis order, unit coefficients omitted,
/// `0` for the zero vector.
pub fn format_linear_combination(v: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if !a.is_one() {
            out.push_str(&format!("{a}*"));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Compact rendering used on the command line: `x2+x3`, `x5-x6`, `2*x1-1/2*x3`.
pub fn format_compact(v: &[Scalar], names: &[String]) -> String {
    format_linear_combination(v, names).replace(' ', "")
}

/// Parses a sum of terms `[sign] [coef*] name`, e.g. `x2+x3`, `-1/2*x6`,
/// `x5 - x6`. A lone `0` is the zero vector. Repeated names accumulate.
pub fn parse_linear_combination(text: &str, names: &[String]) -> Result<Vector, FormatError> {
    let err = |m: &str| FormatError::Vector {
        text: text.to_string(),
        message: m.to_string(),
    };
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err("empty expression"));
    }
    let mut v = zero_vector(names.len());
    if s == "0" {
        return Ok(v);
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut first = true;
    while pos < bytes.len() {
        let mut sign = Scalar::one();
        match bytes[pos] {
            b'+' if !first => pos += 1,
            b'-' => {
                sign = -sign;
                pos += 1;
            }
            _ if !first => return Err(err("expected '+' or '-' between terms")),
            _ => {}
        }
        first = false;
        let end = s[pos..]
            .find(['+', '-'])
            .map_or(s.len(), |k| pos + k);
        let term = &s[pos..end];
        if term.is_empty() {
            return Err(err("missing term"));
        }
        let (coef, name) = match term.rsplit_once('*') {
            Some((c, n)) => {
                let c: Scalar = c.parse().map_err(|_| err(&format!("bad coefficient {c:?}")))?;
                (c, n)
            }
            None => (Scalar::one(), term),
        };
        if !is_valid_name(name) {
            return Err(err(&format!("bad basis name {name:?}")));
        }
        let i = names
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| err(&format!("unknown basis element {name:?}")))?;
        v[i] += &(&sign * &coef);
        pos = end;
    }
    Ok(v)
}

/// Comma-separated list of linear combinations, e.g. `x2+x3,x4`.
pub fn parse_vector_list(text: &str, names: &[String]) -> Result<Vec<Vector>, FormatError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| parse_linear_combination(t, names))
        .collect()
}

/// Parses an algebra file and checks the Jacobi identity.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra, FormatError> {
    let g = parse_algebra_unvalidated(text)?;
    let report = g.validate();
    if let Some(v) = report.violation {
        let n = g.basis_names();
        return Err(FormatError::Jacobi {
            a: n[v.triple.0].clone(),
            b: n[v.triple.1].clone(),
            c: n[v.triple.2].clone(),
            residual: format_linear_combination(&v.residual, n),
            violation: v,
        });
    }
    Ok(g)
}

/// Parses an algebra file without the Jacobi check.
pub fn parse_algebra_unvalidated(text: &str) -> Result<LieAlgebra, FormatError> {
    let mut name: Option<String> = None;
    let mut dim: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut rels: Vec<(usize, usize, Vector)> = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (kw, rest) = content
            .split_once(char::is_whitespace)
            .map(|(a, b)| (a, b.trim()))
            .unwrap_or((content, ""));
        match kw {
            "algebra" => {
                if name.is_some() {
                    return Err(syntax(line, "duplicate 'algebra' line"));
                }
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(syntax(line, "expected 'algebra <name>'"));
                }
                name = Some(rest.to_string());
            }
            "dim" => {
                if name.is_none() || dim.is_some() {
                    return Err(syntax(line, "'dim' must follow 'algebra' and appear once"));
                }
                dim = Some(rest.parse().map_err(|_| syntax(line, format!("bad dimension {rest:?}")))?);
            }
            "basis" => {
                let Some(d) = dim else {
                    return Err(syntax(line, "'basis' must follow 'dim'"));
                };
                if names.is_some() {
                    return Err(syntax(line, "duplicate 'basis' line"));
                }
                let ns: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if ns.len() != d {
                    return Err(syntax(line, format!("expected {d} basis names, found {}", ns.len())));
                }
                for (i, s) in ns.iter().enumerate() {
                    if !is_valid_name(s) {
                        return Err(syntax(line, format!("invalid basis name {s:?}")));
                    }
                    if ns[..i].contains(s) {
                        return Err(syntax(line, format!("duplicate basis name {s:?}")));
                    }
                }
                names = Some(ns);
            }
            "bracket" => {
                let Some(ns) = names.as_ref() else {
                    return Err(syntax(line, "'bracket' before 'basis'"));
                };
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax(line, "expected 'bracket a b = expr'"))?;
                let pair: Vec<&str> = lhs.split_whitespace().collect();
                if pair.len() != 2 {
                    return Err(syntax(line, "expected two basis elements before '='"));
                }
                let idx = |s: &str| {
                    ns.iter()
                        .position(|x| x == s)
                        .ok_or_else(|| syntax(line, format!("unknown basis element {s:?}")))
                };
                let (i, j) = (idx(pair[0])?, idx(pair[1])?);
                if i >= j {
                    return Err(syntax(line, "bracket operands must appear in basis order"));
                }
                if rels.iter().any(|(a, b, _)| (*a, *b) == (i, j)) {
                    return Err(syntax(line, "bracket given twice"));
                }
                let w = parse_linear_combination(rhs.trim(), ns).map_err(|e| syntax(line, e.to_string()))?;
                rels.push((i, j, w));
            }
            other => return Err(syntax(line, format!("unknown keyword {other:?}"))),
        }
    }
    let (Some(name), Some(names)) = (name, names) else {
        return Err(syntax(last_line.max(1), "missing 'algebra', 'dim' or 'basis' header"));
    };
    Ok(LieAlgebra::new(name, names, &rels)?)
}

/// Canonical text; `parse_algebra(serialize_algebra(g))` reproduces `g` and
/// canonical files reproduce themselves byte for byte.
pub fn serialize_algebra(g: &LieAlgebra) -> String {
    let names = g.basis_names();
    let mut out = format!("algebra {}\ndim {}\nbasis {}\n", g.name(), g.dim(), names.join(" "));
    for (i, j, w) in g.relations() {
        out.push_str(&format!(
            "bracket {} {} = {}\n",
            names[i],
            names[j],
            format_linear_combination(&w, names)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int_vector;
    use proptest::prelude::*;

    fn xs(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn parse_h3() {
        let g = parse_algebra("algebra h3\ndim 3\nbasis x1 x2 x3\nbracket x1 x2 = x3\n").unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(g.bracket_basis(0, 1), int_vector(&[0, 0, 1]));
    }

    #[test]
    fn rational_coefficients() {
        let text = "algebra t\ndim 6\nbasis x1 x2 x3 x4 x5 x6\nbracket x1 x2 = -1/2*x6\n";
        let g = parse_algebra(text).unwrap();
        assert_eq!(g.bracket_basis(0, 1)[5], Scalar::new(-1, 2));
        assert_eq!(serialize_algebra(&g), text);
    }

    #[test]
    fn minus_one_coefficient() {
        let text = "algebra t\ndim 6\nbasis x1 x2 x3 x4 x5 x6\nbracket x1 x2 = x3\nbracket x3 x4 = -1*x6\n";
        let g = parse_algebra_unvalidated(text).unwrap();
        assert_eq!(g.bracket_basis(2, 3), int_vector(&[0, 0, 0, 0, 0, -1]));
        assert!(serialize_algebra(&g).contains("bracket x3 x4 = -x6\n"));
    }

    #[test]
    fn comments_and_errors() {
        let ok = "# header\nalgebra a # trailing\n\ndim 2\nbasis p q\n";
        assert_eq!(parse_algebra(ok).unwrap().dim(), 2);
        let bad = "algebra a\ndim 2\nbasis p q\nbracket q p = p\n";
        assert!(matches!(parse_algebra(bad), Err(FormatError::Syntax { line: 4, .. })));
        let bad = "algebra a\ndim 2\nbasis p q\nbracket p q = 2**p\n";
        assert!(matches!(parse_algebra(bad), Err(FormatError::Syntax { line: 4, .. })));
        let bad = "algebra a\ndim 3\nbasis p q\n";
        assert!(matches!(parse_algebra(bad), Err(FormatError::Syntax { line: 3, .. })));
        let jac = "algebra j\ndim 3\nbasis x1 x2 x3\nbracket x1 x2 = x3\nbracket x1 x3 = x1\n";
        match parse_algebra(jac) {
            Err(FormatError::Jacobi { a, b, c, residual, .. }) => {
                assert_eq!((a.as_str(), b.as_str(), c.as_str()), ("x1", "x2", "x3"));
                assert_eq!(residual, "x3");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn vector_syntax() {
        let n = xs(6);
        let vs = parse_vector_list("x2+x3,x4", &n).unwrap();
        assert_eq!(vs, vec![int_vector(&[0, 1, 1, 0, 0, 0]), int_vector(&[0, 0, 0, 1, 0, 0])]);
        assert_eq!(
            parse_linear_combination("x5 - x6", &n).unwrap(),
            int_vector(&[0, 0, 0, 0, 1, -1])
        );
        assert_eq!(
            parse_linear_combination("-1/2*x1+3*x1", &n).unwrap()[0],
            Scalar::new(5, 2)
        );
        assert!(parse_linear_combination("x7", &n).is_err());
        assert!(parse_linear_combination("x1 x2", &n).is_err());
        assert!(parse_linear_combination("", &n).is_err());
        assert_eq!(format_compact(&int_vector(&[0, 1, 0, 0, 0, -1]), &n), "x2-x6");
    }

    proptest! {
        #[test]
        fn linear_combination_round_trip(v in prop::collection::vec((-5i64..=5, 1i64..=4), 5)) {
            let n = xs(5);
            let v: Vector = v.iter().map(|&(p, q)| Scalar::new(p, q)).collect();
            let s = format_linear_combination(&v, &n);
            prop_assert_eq!(parse_linear_combination(&s, &n).unwrap(), v.clone());
            prop_assert_eq!(parse_linear_combination(&format_compact(&v, &n), &n).unwrap(), v);
        }
    }
}
