//! Registry of the algebras, witnesses and expected verdicts used by the
//! acceptance suite and the command line.

mod expectations;

use std::sync::OnceLock;

use serde::Serialize;

pub use expectations::{
    expected, AlgebraType, DimH3Row, DimV2Row, ExampleDecomposition, ExampleFacts, Expectations,
    Provenance, Tagged, TraceFact, V2Exclusion,
};

use crate::existence::TmainCondition;
use crate::format::{parse_algebra, FormatError};
use crate::liealg::LieAlgebra;

/// Where a presentation comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Printed in the classification table of algebras with a 2-dimensional
    /// `V`.
    DimV2Table,
    /// Printed in the classification table of algebras with a 3-dimensional
    /// `H`.
    DimH3Table,
    /// A worked example in the reference text.
    WorkedExample,
    /// Transcribed from de Graaf's classification; not printed in the
    /// reference text.
    DeGraaf,
    /// Standard algebras (Heisenberg, filiform, affine line).
    Standard,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    /// File stem under `catalog/`.
    pub file: &'static str,
    #[serde(skip)]
    pub text: &'static str,
    pub sources: &'static [Source],
    pub aliases: &'static [&'static str],
    pub note: &'static str,
}

impl CatalogEntry {
    /// Algebra name from the file header.
    pub fn name(&self) -> &'static str {
        self.text
            .lines()
            .next()
            .and_then(|l| l.strip_prefix("algebra "))
            .expect("catalog files start with an algebra line")
    }

    pub fn load(&self) -> LieAlgebra {
        parse_algebra(self.text).expect("catalog algebras are valid")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog algebra {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Format(#[from] FormatError),
}

macro_rules! entry {
    ($file:literal, [$($src:expr),*], [$($alias:literal),*], $note:literal) => {
        CatalogEntry {
            file: $file,
            text: include_str!(concat!("../../catalog/", $file, ".alg")),
            sources: &[$($src),*],
            aliases: &[$($alias),*],
            note: $note,
        }
    };
}

static ENTRIES: &[CatalogEntry] = &[
    entry!("L3_1", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L3_2", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L4_1", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L4_2", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L4_3", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_1+R", [Source::DeGraaf], ["R+L5_1", "R2+L4_1", "L4_1+R2"], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_1", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_2+R", [Source::DeGraaf], ["R+L5_2", "R2+L4_2", "L4_2+R2"], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_2", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_3+R", [Source::DeGraaf], ["R+L5_3", "R2+L4_3", "L4_3+R2"], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_3", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_4+R", [Source::DimH3Table], ["R+L5_4"], ""),
    entry!("L5_4", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_5+R", [Source::DimH3Table], ["R+L5_5"], ""),
    entry!("L5_5", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_6+R", [Source::DeGraaf], ["R+L5_6"], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_6", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_7+R", [Source::DeGraaf], ["R+L5_7"], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_7", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_8+R", [Source::DeGraaf], ["R+L5_8"], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_8", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_9+R", [Source::DeGraaf], ["R+L5_9"], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L5_9", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L6_10", [Source::DimV2Table, Source::DimH3Table], [], ""),
    entry!("L6_11", [Source::DimV2Table, Source::DimH3Table], [], ""),
    entry!("L6_12", [Source::DimV2Table, Source::DimH3Table], [], ""),
    entry!("L6_13", [Source::DimV2Table, Source::DimH3Table], [], ""),
    entry!("L6_14", [Source::DimV2Table], [], ""),
    entry!("L6_15", [Source::DimV2Table], [], ""),
    entry!("L6_16", [Source::DimV2Table], [], ""),
    entry!("L6_17", [Source::DimV2Table], [], ""),
    entry!("L6_18", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L6_19_e0", [Source::DimV2Table, Source::DimH3Table], ["L6_19_e0"], ""),
    entry!("L6_19_e1", [Source::DimV2Table], ["L6_19_e1"], ""),
    entry!("L6_19_em1", [Source::DimV2Table], ["L6_19_em1"], ""),
    entry!("L6_20", [Source::DimV2Table], [], ""),
    entry!("L6_21_e0", [Source::DimV2Table], ["L6_21_e0"], ""),
    entry!("L6_21_e1", [Source::DimV2Table], ["L6_21_e1"], ""),
    entry!("L6_21_em1", [Source::DimV2Table], ["L6_21_em1"], ""),
    entry!("L6_22_e0", [Source::DimH3Table], ["L6_22_e0"], ""),
    entry!("L6_22_e1", [Source::DimV2Table, Source::DimH3Table], ["L6_22_e1"], "isomorphic to h3+h3; isomorphism not verified"),
    entry!("L6_22_em1", [Source::DimH3Table], ["L6_22_em1"], ""),
    entry!("L6_23", [Source::DimH3Table], [], ""),
    entry!("L6_24_e0", [Source::DimH3Table], ["L6_24_e0"], ""),
    entry!("L6_24_e1", [Source::DimV2Table, Source::DimH3Table], ["L6_24_e1"], ""),
    entry!("L6_24_em1", [Source::DimH3Table], ["L6_24_em1"], ""),
    entry!("L6_25", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("L6_26", [Source::DeGraaf], [], "transcribed from de Graaf's classification of nilpotent Lie algebras of dimension at most 6"),
    entry!("R+h5", [Source::WorkedExample], ["h5+R"], "isomorphic to L5_4+R; isomorphism not verified"),
    entry!("aff2", [Source::Standard], [], ""),
    entry!("f4", [Source::Standard], [], ""),
    entry!("fil6", [Source::WorkedExample], [], ""),
    entry!("h3+h3", [Source::WorkedExample], [], "isomorphic to L6_22(1); isomorphism not verified"),
    entry!("h3", [Source::Standard], [], ""),
    entry!("h5", [Source::Standard], [], ""),
    entry!("nonuni5_a", [Source::WorkedExample], [], ""),
    entry!("nonuni5_b", [Source::WorkedExample], [], ""),
    entry!("nonuni5_c", [Source::WorkedExample], [], ""),
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

/// Looks up by algebra name, alias or file stem.
pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name() == name || e.file == name || e.aliases.contains(&name))
}

pub fn load(name: &str) -> Result<LieAlgebra, CatalogError> {
    lookup(name)
        .map(CatalogEntry::load)
        .ok_or_else(|| CatalogError::Unknown(name.to_string()))
}

/// The 34 real 6-dimensional nilpotent algebras of the classification, one
/// presentation each, in classification order.
pub fn six_dim_nilpotent() -> &'static [&'static str] {
    static NAMES: OnceLock<Vec<&'static str>> = OnceLock::new();
    NAMES.get_or_init(|| {
        let mut out: Vec<&'static str> = (1..=9)
            .map(|k| lookup(&format!("L5_{k}+R")).expect("registered").name())
            .collect();
        for e in ENTRIES.iter().filter(|e| e.file.starts_with("L6_")) {
            out.push(e.name());
        }
        out
    })
}

/// Nilpotent catalog algebras of dimension at most `n`.
pub fn nilpotent_up_to(n: usize) -> Vec<&'static str> {
    ENTRIES
        .iter()
        .filter(|e| {
            let g = e.load();
            g.dim() <= n && g.is_nilpotent()
        })
        .map(CatalogEntry::name)
        .collect()
}

/// Exclusions for the 2-dimensional `V` classification, with the certificate
/// kind the classification proof uses.
pub fn dim_v2_exclusions() -> Vec<(&'static str, V2Exclusion)> {
    six_dim_nilpotent()
        .iter()
        .filter_map(|n| {
            expected(n)
                .ok()
                .and_then(|e| e.v2_exclusion.map(|t| (*n, t.value)))
        })
        .collect()
}

/// Exclusions for the 3-dimensional `H` classification, with the condition
/// the classification proof names.
pub fn dim_h3_exclusions() -> Vec<(&'static str, TmainCondition)> {
    six_dim_nilpotent()
        .iter()
        .filter_map(|n| {
            expected(n)
                .ok()
                .and_then(|e| e.h3_exclusion.map(|t| (*n, t.value)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::serialize_algebra;

    #[test]
    fn every_entry_validates_and_round_trips() {
        for e in entries() {
            let g = e.load();
            assert!(g.validate().ok(), "{}", e.name());
            assert_eq!(serialize_algebra(&g), e.text, "{}", e.name());
        }
    }

    #[test]
    fn names_are_unique() {
        let mut seen = std::collections::HashSet::new();
        for e in entries() {
            for n in std::iter::once(e.name()).chain(e.aliases.iter().copied()) {
                assert!(seen.insert(n), "duplicate name {n}");
            }
        }
    }

    #[test]
    fn load_examples() {
        let g = load("L6_10").unwrap();
        assert_eq!((g.dim(), g.relations().len()), (6, 3));
        let g = load("h3+h3").unwrap();
        assert_eq!(g.basis_names(), ["x1", "y1", "z1", "x2", "y2", "z2"]);
        let g = load("nonuni5_b").unwrap();
        assert_eq!(g.dim(), 5);
        assert!(!g.is_nilpotent());
        assert_eq!(load("R+L5_4").unwrap().name(), "L5_4+R");
        assert_eq!(load("R2+L4_3").unwrap().name(), "L5_3+R");
        assert!(matches!(load("L9_9"), Err(CatalogError::Unknown(_))));
    }

    #[test]
    fn thirty_four_six_dimensional_nilpotent() {
        let names = six_dim_nilpotent();
        assert_eq!(names.len(), 34);
        for n in names {
            let g = load(n).unwrap();
            assert_eq!(g.dim(), 6);
            assert!(g.is_nilpotent(), "{n}");
        }
    }
}
