use serde::Serialize;

use super::{lookup, CatalogError, Source};
use crate::existence::TmainCondition;

pub use crate::decomp::AlgebraType;

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "detail")]
pub enum Provenance {
    /// Stated in the reference text; the source says where.
    Paper(Source),
    /// Fact about a transcribed external presentation.
    External,
    /// Computed by an independent oracle; the string names it.
    Derived(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tagged<T> {
    pub value: T,
    pub provenance: Provenance,
}

fn paper<T>(value: T, s: Source) -> Option<Tagged<T>> {
    Some(Tagged {
        value,
        provenance: Provenance::Paper(s),
    })
}

/// Row of the classification with `dim V = 2`. Vectors use the command-line
/// syntax, e.g. `x2+x3,x4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimV2Row {
    pub derived: &'static str,
    pub v: &'static str,
    pub v_bracket_g: &'static str,
}

/// Row of the classification with `dim H = 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimH3Row {
    pub h: &'static str,
    pub v: &'static str,
    pub hbar: AlgebraType,
    pub induced: AlgebraType,
}

/// Certificate kind used to exclude an algebra from the `dim V = 2` list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum V2Exclusion {
    DerivedDimension,
    AbelianHyperplane,
    Pencil,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleDecomposition {
    pub label: &'static str,
    pub h: &'static str,
    pub v: &'static str,
    pub mutual: bool,
    pub induced_abelian: Option<bool>,
    /// Induced bracket of the first two `V` vectors, as `(a, b, value)`.
    pub induced_bracket: Option<(&'static str, &'static str, &'static str)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceFact {
    pub vector: &'static str,
    pub trace: &'static str,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExampleFacts {
    pub decompositions: Vec<Tagged<ExampleDecomposition>>,
    pub dim_derived: Option<Tagged<usize>>,
    pub unimodular: Option<Tagged<bool>>,
    pub traces: Vec<Tagged<TraceFact>>,
    pub filiform: Option<Tagged<bool>>,
    /// No respectful decomposition with `V` a subalgebra of this dimension.
    pub no_subalgebra_v_of_dim: Option<Tagged<usize>>,
    pub isomorphic_to: Option<Tagged<&'static str>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Expectations {
    pub dim_v2: Option<Tagged<DimV2Row>>,
    pub v2_exclusion: Option<Tagged<V2Exclusion>>,
    pub codim_one_abelian_ideal: Option<Tagged<bool>>,
    pub dim_h3: Option<Tagged<DimH3Row>>,
    pub h3_exclusion: Option<Tagged<TmainCondition>>,
    pub example: ExampleFacts,
}

fn v2_row(name: &str) -> Option<DimV2Row> {
    let r = |derived, v, v_bracket_g| Some(DimV2Row { derived, v, v_bracket_g });
    match name {
        "L6_10" => r("x3,x6", "x4,x5", "x6"),
        "L6_11" | "L6_12" => r("x3,x4,x6", "x2,x5", "x3,x6"),
        "L6_13" => r("x3,x5,x6", "x3,x4", "x5,x6"),
        "L6_14" => r("x3,x4,x5,x6", "x2+x3,x4", "x3+x4,x5,x6"),
        "L6_15" => r("x3,x4,x5,x6", "x2,x4", "x3,x5,x6"),
        "L6_16" => r("x3,x4,x5,x6", "x2,x5", "x3,x6"),
        "L6_17" => r("x3,x4,x5,x6", "x2+x4,x3", "x3+x5,x4,x6"),
        "L6_19(0)" | "L6_19(1)" | "L6_19(-1)" | "L6_20" => r("x4,x5,x6", "x2,x4+x5", "x4,x6"),
        "L6_21(0)" | "L6_21(1)" | "L6_21(-1)" => r("x3,x4,x5,x6", "x1,x4+x5", "x3,x4,x6"),
        "L6_22(1)" => r("x5,x6", "x1+x4,x2-x3", "x5-x6"),
        "L6_24(1)" => r("x3,x5,x6", "x1+x2,x3+x4", "x3,x5+x6"),
        _ => None,
    }
}

fn v2_exclusion(name: &str) -> Option<V2Exclusion> {
    use V2Exclusion::*;
    match name {
        "L5_1+R" | "L5_2+R" | "L5_4+R" => Some(DerivedDimension),
        "L5_3+R" | "L5_7+R" | "L5_8+R" | "L6_18" | "L6_25" => Some(AbelianHyperplane),
        "L5_5+R" | "L5_6+R" | "L5_9+R" | "L6_22(0)" | "L6_22(-1)" | "L6_23" | "L6_24(0)"
        | "L6_24(-1)" | "L6_26" => Some(Pencil),
        _ => None,
    }
}

fn h3_row(name: &str) -> Option<DimH3Row> {
    use AlgebraType::*;
    let r = |h, v, hbar, induced| Some(DimH3Row { h, v, hbar, induced });
    match name {
        "L5_4+R" => r("x1,x2,x5+x6", "x3,x4,x5-x6", RPlusH3, Heisenberg3),
        "L5_5+R" => r("x1,x3,x5+x6", "x2,x4,x6", RPlusH3, Heisenberg3),
        "L6_10" => r("x1,x2,x6", "x3,x4,x5", Filiform4, Abelian3),
        "L6_11" | "L6_12" => r("x1,x3,x6", "x2,x4,x5", Filiform4, Abelian3),
        "L6_13" => r("x1,x3,x6", "x2,x4,x5+x6", Filiform4, Heisenberg3),
        "L6_19(0)" => r("x2,x4,x5", "x1,x3,x6", RPlusH3, Abelian3),
        "L6_22(0)" | "L6_22(1)" | "L6_22(-1)" => r("x1,x2,x6", "x3,x4,x5+x6", RPlusH3, Heisenberg3),
        "L6_23" | "L6_24(0)" | "L6_24(1)" | "L6_24(-1)" => {
            r("x1,x3,x6", "x2,x4,x5+x6", RPlusH3, Heisenberg3)
        }
        _ => None,
    }
}

fn h3_exclusion(name: &str) -> Option<TmainCondition> {
    use TmainCondition::*;
    match name {
        "L5_8+R" | "L6_25" => Some(NoCodimOneAbelianIdeal),
        "L6_26" | "L5_1+R" | "L5_2+R" | "L5_3+R" => Some(CenterAtMostTwo),
        "L5_6+R" | "L5_7+R" | "L5_9+R" | "L6_14" | "L6_15" | "L6_16" | "L6_17" | "L6_18"
        | "L6_21(0)" | "L6_21(1)" | "L6_21(-1)" => Some(DerivedPlusCenterAtMostThree),
        "L6_19(1)" | "L6_19(-1)" | "L6_20" => Some(FourthTermNonzero),
        _ => None,
    }
}

fn decomp(
    label: &'static str,
    h: &'static str,
    v: &'static str,
    mutual: bool,
    induced_abelian: Option<bool>,
) -> Tagged<ExampleDecomposition> {
    Tagged {
        value: ExampleDecomposition {
            label,
            h,
            v,
            mutual,
            induced_abelian,
            induced_bracket: None,
        },
        provenance: Provenance::Paper(Source::WorkedExample),
    }
}

fn example_facts(name: &str) -> ExampleFacts {
    let ex = Source::WorkedExample;
    let derived = |value| {
        Some(Tagged {
            value,
            provenance: Provenance::Derived("direct bracket computation"),
        })
    };
    let trace = |vector, trace| Tagged {
        value: TraceFact { vector, trace },
        provenance: Provenance::Derived("trace of the ad matrix by hand"),
    };
    let mut f = ExampleFacts::default();
    match name {
        "nonuni5_a" => {
            f.decompositions.push(decomp("", "x1,y1,z+y2", "x2,y2", false, Some(true)));
            f.dim_derived = paper(2, ex);
            f.unimodular = paper(false, ex);
            f.traces.push(trace("x2", "1"));
        }
        "nonuni5_b" => {
            f.decompositions.push(decomp("", "h1,h2,h3", "v1,v2", false, Some(false)));
            f.dim_derived = paper(2, ex);
            f.unimodular = paper(false, ex);
            f.traces.push(trace("v2", "-2"));
        }
        "nonuni5_c" => {
            f.decompositions.push(decomp("", "h1,h2,h3", "v1,v2", false, Some(false)));
            f.dim_derived = paper(3, ex);
            f.unimodular = paper(false, ex);
            f.traces.push(trace("v2", "4"));
        }
        "R+h5" => {
            f.decompositions.push(decomp("", "x1,y1,z+w", "x2,y2,z-w", true, None));
            f.dim_derived = paper(1, ex);
            f.isomorphic_to = derived("L5_4+R");
        }
        "h3+h3" => {
            f.decompositions.push(decomp("a", "x1,y1,z2", "x2,y2,z1", true, Some(true)));
            let mut b = decomp("b", "x1,y1,z1+z2", "x2,y2,z1-z2", true, Some(false));
            b.value.induced_bracket = Some(("x2", "y2", "-1/2*z1+1/2*z2"));
            f.decompositions.push(b);
            f.isomorphic_to = paper("L6_22(1)", Source::DimH3Table);
        }
        "fil6" => {
            f.filiform = paper(true, ex);
            f.no_subalgebra_v_of_dim = paper(3, ex);
        }
        "L6_22(1)" => f.isomorphic_to = paper("h3+h3", Source::DimH3Table),
        _ => {}
    }
    f
}

/// Expected facts for a catalog algebra, each tagged with its provenance.
pub fn expected(name: &str) -> Result<Expectations, CatalogError> {
    let e = lookup(name).ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
    let name = e.name();
    let codim_one = match name {
        // Stated for these in the classification proofs.
        "L5_3+R" | "L5_7+R" | "L5_8+R" | "L6_18" | "L6_25" => paper(true, Source::DimV2Table),
        _ => None,
    };
    Ok(Expectations {
        dim_v2: v2_row(name).and_then(|r| paper(r, Source::DimV2Table)),
        v2_exclusion: v2_exclusion(name).and_then(|r| paper(r, Source::DimV2Table)),
        codim_one_abelian_ideal: codim_one,
        dim_h3: h3_row(name).and_then(|r| paper(r, Source::DimH3Table)),
        h3_exclusion: h3_exclusion(name).and_then(|r| paper(r, Source::DimH3Table)),
        example: example_facts(name),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::six_dim_nilpotent;

    #[test]
    fn classification_counts() {
        let all = six_dim_nilpotent();
        let v2 = all.iter().filter(|n| expected(n).unwrap().dim_v2.is_some()).count();
        let v2x = all.iter().filter(|n| expected(n).unwrap().v2_exclusion.is_some()).count();
        let h3 = all.iter().filter(|n| expected(n).unwrap().dim_h3.is_some()).count();
        let h3x = all.iter().filter(|n| expected(n).unwrap().h3_exclusion.is_some()).count();
        assert_eq!((v2, v2x), (17, 17));
        assert_eq!((h3, h3x), (14, 20));
        for n in all {
            let e = expected(n).unwrap();
            assert!(e.dim_v2.is_some() != e.v2_exclusion.is_some(), "{n}");
            assert!(e.dim_h3.is_some() != e.h3_exclusion.is_some(), "{n}");
        }
    }

    #[test]
    fn sample_rows() {
        let e = expected("L6_14").unwrap();
        assert_eq!(e.dim_v2.unwrap().value.v, "x2+x3,x4");
        let e = expected("R+L5_4").unwrap();
        let row = e.dim_h3.unwrap().value;
        assert_eq!((row.hbar, row.induced), (AlgebraType::RPlusH3, AlgebraType::Heisenberg3));
        let e = expected("nonuni5_c").unwrap();
        assert_eq!(e.example.dim_derived.unwrap().value, 3);
        assert_eq!(e.example.decompositions[0].value.induced_abelian, Some(false));
    }
}
