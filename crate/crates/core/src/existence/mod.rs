//! Deciding and constructing open respectful decompositions: the criterion
//! for `dim V = 2`, obstruction certificates, the screen for `dim H = 3` in
//! dimension six, and witness search.

mod hyperplane;
mod modp;
mod pencil;
mod search;

use serde::Serialize;

pub use hyperplane::{abelian_hyperplane, HyperplaneAnswer};
pub use pencil::{
    pencil_matrix, pencil_obstruction, Constraint, ConstraintKind, PencilCertificate,
    PencilOutcome, PencilStratum,
};
pub use search::{
    invariant_closure, search_v2, witness_search, SearchOptions, SearchOutcome, DEFAULT_BUDGET,
    DEFAULT_SEED, SEED_ENV,
};

use crate::decomp::{DecompError, Decomposition};
use crate::exactlin::{LinalgError, Subspace, Vector};
use crate::liealg::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExistenceError {
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("expected dim V = {expected}, got {found}")]
    WrongVDimension { expected: usize, found: usize },
    #[error("expected an algebra of dimension {expected}, got {found}")]
    WrongAlgebraDimension { expected: usize, found: usize },
    #[error("dim H + dim V = {sum} but dim g = {n}")]
    SplitMismatch { sum: usize, n: usize },
    #[error("the algebra is perfect")]
    Perfect,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Exists,
    NotExists,
    Unknown,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Exists => "EXISTS",
            Status::NotExists => "NOT_EXISTS",
            Status::Unknown => "UNKNOWN",
        })
    }
}

/// An owned `(H, V)` pair; re-verify with `Decomposition::new`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub h: Subspace,
    pub v: Subspace,
}

impl Witness {
    pub fn decomposition<'a>(&self, g: &'a LieAlgebra) -> Result<Decomposition<'a>, DecompError> {
        Decomposition::new(g, self.h.clone(), self.v.clone())
    }

    /// Open respectful with the stored dimensions, checked from scratch.
    pub fn verify_open(&self, g: &LieAlgebra) -> bool {
        self.decomposition(g).is_ok_and(|d| d.analyze().open)
    }
}

/// The four conditions screening 6-dimensional nilpotent algebras for an
/// open respectful decomposition with `dim H = 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TmainCondition {
    /// No abelian ideal of codimension one.
    NoCodimOneAbelianIdeal,
    /// `dim Z(g) <= 2`.
    CenterAtMostTwo,
    /// `dim([g,g] + Z(g)) <= 3`.
    DerivedPlusCenterAtMostThree,
    /// `dim Z(g) = 1` and `dim [g,g] = 3` imply `g^4 != 0`.
    FourthTermNonzero,
}

impl TmainCondition {
    pub const ALL: [TmainCondition; 4] = [
        TmainCondition::NoCodimOneAbelianIdeal,
        TmainCondition::CenterAtMostTwo,
        TmainCondition::DerivedPlusCenterAtMostThree,
        TmainCondition::FourthTermNonzero,
    ];

    pub fn letter(self) -> char {
        match self {
            TmainCondition::NoCodimOneAbelianIdeal => 'a',
            TmainCondition::CenterAtMostTwo => 'b',
            TmainCondition::DerivedPlusCenterAtMostThree => 'c',
            TmainCondition::FourthTermNonzero => 'd',
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TmainCondition::NoCodimOneAbelianIdeal => "no codimension-one abelian ideal",
            TmainCondition::CenterAtMostTwo => "dim Z(g) <= 2",
            TmainCondition::DerivedPlusCenterAtMostThree => "dim([g,g] + Z(g)) <= 3",
            TmainCondition::FourthTermNonzero => "dim Z(g) = 1 and dim [g,g] = 3 imply g^4 != 0",
        }
    }

    pub fn evaluate(self, g: &LieAlgebra) -> Result<bool, ExistenceError> {
        let z = g.center();
        let d = g.derived();
        Ok(match self {
            TmainCondition::NoCodimOneAbelianIdeal => !abelian_hyperplane(g)?.is_yes(),
            TmainCondition::CenterAtMostTwo => z.dim() <= 2,
            TmainCondition::DerivedPlusCenterAtMostThree => d.sum(&z)?.dim() <= 3,
            TmainCondition::FourthTermNonzero => {
                !(z.dim() == 1 && d.dim() == 3) || !g.lower_central_term(4).is_zero()
            }
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TmainReport {
    pub values: Vec<(TmainCondition, bool)>,
}

impl TmainReport {
    pub fn all_hold(&self) -> bool {
        self.values.iter().all(|(_, b)| *b)
    }

    pub fn failing(&self) -> Vec<TmainCondition> {
        self.values.iter().filter(|(_, b)| !b).map(|(c, _)| *c).collect()
    }

    pub fn get(&self, c: TmainCondition) -> bool {
        self.values.iter().find(|(x, _)| *x == c).expect("all conditions").1
    }
}

pub fn tmain_conditions(g: &LieAlgebra) -> Result<TmainReport, ExistenceError> {
    if g.dim() != 6 {
        return Err(ExistenceError::WrongAlgebraDimension { expected: 6, found: g.dim() });
    }
    if !g.is_nilpotent() {
        return Err(ExistenceError::NotNilpotent);
    }
    let values = TmainCondition::ALL
        .iter()
        .map(|c| Ok((*c, c.evaluate(g)?)))
        .collect::<Result<_, ExistenceError>>()?;
    Ok(TmainReport { values })
}

/// Machine-checkable reason for a `NOT_EXISTS` verdict.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Certificate {
    /// `dim [g,g] <= 1` rules out `dim V = 2`.
    #[serde(rename = "DERIVED_DIM_LE_1")]
    DerivedDimLe1 { derived_dim: usize },
    /// `ker functional` is an abelian ideal of codimension one.
    Codim1AbelianIdeal { functional: Vector },
    /// Every real functional on `[g,g]` has an abelian radical.
    PencilAllRadicalsAbelian(PencilCertificate),
    /// A failed screening condition.
    TmainConditionFail { condition: TmainCondition },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::DerivedDimLe1 { .. } => "DERIVED_DIM_LE_1",
            Certificate::Codim1AbelianIdeal { .. } => "CODIM1_ABELIAN_IDEAL",
            Certificate::PencilAllRadicalsAbelian(_) => "PENCIL_ALL_RADICALS_ABELIAN",
            Certificate::TmainConditionFail { .. } => "TMAIN_CONDITION_FAIL",
        }
    }

    /// Re-checks the certificate against `g` from scratch.
    pub fn replay(&self, g: &LieAlgebra) -> Result<(), String> {
        match self {
            Certificate::DerivedDimLe1 { derived_dim } => {
                let d = g.derived().dim();
                if d != *derived_dim || d > 1 {
                    return Err(format!("dim [g,g] = {d}"));
                }
                Ok(())
            }
            Certificate::Codim1AbelianIdeal { functional } => {
                hyperplane::verify_functional(g, functional)
            }
            Certificate::PencilAllRadicalsAbelian(c) => c.replay(g),
            Certificate::TmainConditionFail { condition } => match condition.evaluate(g) {
                Ok(false) => Ok(()),
                Ok(true) => Err(format!("condition ({}) holds", condition.letter())),
                Err(e) => Err(e.to_string()),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub certificate: Option<Certificate>,
    /// Candidates examined by the search before the verdict.
    pub trials: u64,
    /// Why an `UNKNOWN` verdict could not be settled.
    pub note: Option<String>,
}

impl Verdict {
    fn exists(w: Witness, trials: u64) -> Self {
        Verdict { status: Status::Exists, witness: Some(w), certificate: None, trials, note: None }
    }

    fn not_exists(c: Certificate, trials: u64) -> Self {
        Verdict { status: Status::NotExists, witness: None, certificate: Some(c), trials, note: None }
    }

    fn unknown(trials: u64, note: String) -> Self {
        Verdict { status: Status::Unknown, witness: None, certificate: None, trials, note: Some(note) }
    }
}

/// The three conditions characterizing a 2-dimensional `V` in a nilpotent
/// algebra that admits a complementary `H` making `(H, V)` open respectful.
#[derive(Debug, Clone, Serialize)]
pub struct V2Conditions {
    /// `[V, V] != 0`.
    pub bracket_nonzero: bool,
    /// `V ∩ [V, g] = 0`.
    pub meets_image_trivially: bool,
    /// `[V, g] != [g, g]`.
    pub image_proper: bool,
    pub v_bracket_g: Subspace,
}

impl V2Conditions {
    pub fn all(&self) -> bool {
        self.bracket_nonzero && self.meets_image_trivially && self.image_proper
    }
}

pub fn v2_conditions(g: &LieAlgebra, v: &Subspace) -> Result<V2Conditions, ExistenceError> {
    if v.dim() != 2 {
        return Err(ExistenceError::WrongVDimension { expected: 2, found: v.dim() });
    }
    if !g.is_nilpotent() {
        return Err(ExistenceError::NotNilpotent);
    }
    Ok(v2_conditions_unchecked(g, v))
}

fn v2_conditions_unchecked(g: &LieAlgebra, v: &Subspace) -> V2Conditions {
    let vb = v.basis_vectors();
    let w = g.subspace_bracket(v, &g.full());
    V2Conditions {
        bracket_nonzero: crate::decomp::nonzero(&g.bracket_unchecked(&vb[0], &vb[1])),
        meets_image_trivially: v.intersect(&w).expect("same ambient").is_zero(),
        image_proper: w != g.derived(),
        v_bracket_g: w,
    }
}

/// A complement `H` of `V` with `[V, g] ⊆ H` and `[g, g] ⊄ H`.
///
/// Extends `[V, g]` greedily by standard basis vectors. If the result
/// contains `[g, g]`, the generator carrying the component of the first
/// derived basis vector outside `[V, g]` is shifted by the first basis
/// vector of `V`, which removes that vector from `H`.
pub fn construct_h_from_v(g: &LieAlgebra, v: &Subspace) -> Result<Subspace, ExistenceError> {
    let c = v2_conditions(g, v)?;
    if !c.all() {
        return Err(ExistenceError::Precondition("V fails the dim V = 2 conditions".into()));
    }
    let n = g.dim();
    let w = c.v_bracket_g;
    let wv = w.sum(v)?;
    let extra = wv.complement(&g.full())?.basis_vectors();
    let mut gens = w.basis_vectors();
    gens.extend(extra.iter().cloned());
    let mut h = Subspace::span(&gens, n)?;
    let d = g.derived();
    if h.contains(&d) {
        let dv = d
            .basis_vectors()
            .into_iter()
            .find(|x| !w.contains_vector(x))
            .ok_or_else(|| ExistenceError::Internal("[V,g] = [g,g]".into()))?;
        // Coordinates of dv on (W basis, extra) inside the old H.
        let mut frame = w.basis_vectors();
        frame.extend(extra.iter().cloned());
        let coords = crate::exactlin::coordinates_in(&frame, &dv)
            .ok_or_else(|| ExistenceError::Internal("[g,g] not in H".into()))?;
        let j = (w.dim()..frame.len())
            .find(|&j| !coords[j].is_zero())
            .ok_or_else(|| ExistenceError::Internal("derived vector inside [V,g]".into()))?;
        let v1 = v.basis().row(0);
        frame[j] = crate::exactlin::add_vectors(&frame[j], v1);
        h = Subspace::span(&frame, n)?;
    }
    let d = Decomposition::new(g, h.clone(), v.clone())?;
    if !d.analyze().open || !h.contains(&w) || h.contains(&g.derived()) {
        return Err(ExistenceError::Internal("constructed H is not valid".into()));
    }
    Ok(h)
}

/// A 2-dimensional `V` inside `[g,g]` satisfying the `dim V = 2` conditions,
/// when `[g,g]` is non-abelian and `dim [g,g] - dim [g,[g,g]] >= 2`.
pub fn derna_witness(g: &LieAlgebra) -> Option<Subspace> {
    if !g.is_nilpotent() {
        return None;
    }
    let d = g.derived();
    if g.subspace_bracket(&d, &d).is_zero() {
        return None;
    }
    let gd = g.subspace_bracket(&g.full(), &d);
    if d.dim() < gd.dim() + 2 {
        return None;
    }
    let basis = d.basis_vectors();
    let k = basis.len();
    let n = g.dim();
    // Coefficient vectors of height <= 2, first nonzero entry positive,
    // ordered by height and then lexicographically.
    let mut coeffs: Vec<Vec<i64>> = (0..5usize.pow(k as u32))
        .map(|mut code| {
            (0..k)
                .map(|_| {
                    let digit = (code % 5) as i64 - 2;
                    code /= 5;
                    digit
                })
                .collect::<Vec<i64>>()
        })
        .filter(|c| c.iter().find(|&&x| x != 0).is_some_and(|f| *f > 0))
        .collect();
    coeffs.sort_by_key(|c| (c.iter().map(|x| x.abs()).max(), c.iter().filter(|x| **x != 0).count()));
    let vecs: Vec<Vector> = coeffs
        .iter()
        .map(|c| {
            let mut out = crate::exactlin::zero_vector(n);
            for (ci, b) in c.iter().zip(&basis) {
                crate::exactlin::axpy(&mut out, &crate::exactlin::Scalar::from_int(*ci), b);
            }
            out
        })
        .collect();
    for i in 0..vecs.len() {
        for j in i + 1..vecs.len() {
            if !crate::decomp::nonzero(&g.bracket_unchecked(&vecs[i], &vecs[j])) {
                continue;
            }
            let v = Subspace::span(&[vecs[i].clone(), vecs[j].clone()], n).expect("lengths");
            if v.dim() != 2 || v.sum(&gd).expect("ambient").dim() != gd.dim() + 2 {
                continue;
            }
            if v2_conditions_unchecked(g, &v).all() {
                return Some(v);
            }
        }
    }
    None
}

/// Decision for `dim V = 2`: search, then obstructions in a fixed order.
pub fn v2_decide(g: &LieAlgebra, opts: &SearchOptions) -> Result<Verdict, ExistenceError> {
    if !g.is_nilpotent() {
        return Err(ExistenceError::NotNilpotent);
    }
    let found = search_v2(g, opts);
    let trials = found.trials();
    if let Some(w) = found.witness {
        return Ok(Verdict::exists(w, trials));
    }
    let dd = g.derived().dim();
    if dd <= 1 {
        return Ok(Verdict::not_exists(Certificate::DerivedDimLe1 { derived_dim: dd }, trials));
    }
    if let HyperplaneAnswer::Yes { functional } = abelian_hyperplane(g)? {
        return Ok(Verdict::not_exists(Certificate::Codim1AbelianIdeal { functional }, trials));
    }
    match pencil_obstruction(g)? {
        PencilOutcome::Obstructed(c) => {
            Ok(Verdict::not_exists(Certificate::PencilAllRadicalsAbelian(c), trials))
        }
        PencilOutcome::NotObstructed { .. } => Ok(Verdict::unknown(
            trials,
            "search found nothing and a functional with non-abelian radical exists".into(),
        )),
        PencilOutcome::Unknown { reason } => Ok(Verdict::unknown(trials, reason)),
    }
}

/// Decision for `dim H = dim V = 3` in dimension six: a failed screening
/// condition is a certificate; otherwise search.
pub fn h3_decide(g: &LieAlgebra, opts: &SearchOptions) -> Result<Verdict, ExistenceError> {
    let report = tmain_conditions(g)?;
    if let Some(c) = report.failing().first() {
        return Ok(Verdict::not_exists(Certificate::TmainConditionFail { condition: *c }, 0));
    }
    let found = witness_search(g, 3, 3, opts)?;
    let trials = found.trials();
    Ok(match found.witness {
        Some(w) => Verdict::exists(w, trials),
        None => Verdict::unknown(trials, "all conditions hold but the search found no witness".into()),
    })
}
