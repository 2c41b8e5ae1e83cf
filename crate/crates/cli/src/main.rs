//! `respect-kit`: command-line access to the respect-core engine.
//!
//! Exit codes: 0 verified success, 1 verified negative, 2 UNKNOWN,
//! 64 usage error, 65 input data error.

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use respect_core::catalog;
use respect_core::decomp::{check_lji, structural_conditions_dim6, Decomposition};
use respect_core::exactlin::{Matrix, Scalar, Subspace, Vector};
use respect_core::existence::{
    abelian_hyperplane, tmain_conditions, v2_decide, witness_search, Certificate, ExistenceError,
    HyperplaneAnswer, SearchOptions, Status, Witness,
};
use respect_core::format::{format_compact, parse_algebra, parse_linear_combination, parse_vector_list};
use respect_core::geodesic::{geodesic_admissible, is_geodesic, MetricLieAlgebra};
use respect_core::liealg::LieAlgebra;
use respect_core::tables::reproduce_tables;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "respect-kit", version, about = "Respectful decompositions of Lie algebras")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra and check the Jacobi identity.
    Validate { algebra: String },
    /// Structural invariants of an algebra.
    Info { algebra: String },
    /// Analyze a candidate decomposition (H, V).
    CheckDecomp {
        algebra: String,
        #[arg(long = "H", value_name = "VECTORS")]
        h: String,
        #[arg(long = "V", value_name = "VECTORS")]
        v: String,
        /// Also require [H, V] in V.
        #[arg(long)]
        mutual: bool,
    },
    /// Search for an open respectful decomposition with the given dimensions.
    Find {
        algebra: String,
        #[arg(long = "dimV")]
        dim_v: usize,
        /// Defaults to dim g - dimV.
        #[arg(long = "dimH")]
        dim_h: Option<usize>,
        #[arg(long)]
        mutual: bool,
        /// Search for V a subalgebra instead of open decompositions.
        #[arg(long)]
        v_subalgebra: bool,
        /// Random candidates after the structured pass.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decide existence of an open respectful decomposition with dim V = 2.
    DecideV2 { algebra: String },
    /// Screening conditions for dim H = 3 in dimension six.
    Tmain { algebra: String },
    /// Decide whether the algebra has an abelian ideal of codimension one.
    AbelianHyperplane { algebra: String },
    /// Geodesic test for a vector, with an optional Gram matrix file.
    Geodesic {
        algebra: String,
        #[arg(long)]
        vector: String,
        #[arg(long)]
        gram: Option<String>,
    },
    /// Reproduce both classification tables.
    Tables,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
        }
    }
}

fn data(e: impl ToString) -> CliError {
    CliError::Data(e.to_string())
}

impl From<ExistenceError> for CliError {
    fn from(e: ExistenceError) -> Self {
        data(e)
    }
}

/// Command result: exit code, JSON tree and text rendering.
struct Outcome {
    code: u8,
    report: Value,
    text: String,
}

fn read_text(arg: &str) -> Result<Option<String>, CliError> {
    let p = Path::new(arg);
    if p.is_file() {
        return std::fs::read_to_string(p)
            .map(Some)
            .map_err(|e| CliError::Usage(format!("cannot read {arg}: {e}")));
    }
    Ok(None)
}

/// A file path, or a catalog name when no such file exists.
fn load_algebra(arg: &str) -> Result<LieAlgebra, CliError> {
    match read_text(arg)? {
        Some(text) => parse_algebra(&text).map_err(|e| CliError::Data(format!("{arg}: {e}"))),
        None => catalog::load(arg)
            .map_err(|_| CliError::Usage(format!("{arg}: no such file or catalog algebra"))),
    }
}

fn compact(g: &LieAlgebra, v: &[Scalar]) -> String {
    format_compact(v, g.basis_names())
}

fn subspace_text(g: &LieAlgebra, s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    s.basis_vectors().iter().map(|v| compact(g, v)).collect::<Vec<_>>().join(",")
}

fn span(g: &LieAlgebra, text: &str) -> Result<Subspace, CliError> {
    let vs = parse_vector_list(text, g.basis_names()).map_err(data)?;
    Subspace::span(&vs, g.dim()).map_err(data)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn validate(arg: &str) -> Result<Outcome, CliError> {
    let text = read_text(arg)?;
    let g = match &text {
        Some(t) => respect_core::format::parse_algebra_unvalidated(t).map_err(|e| CliError::Data(format!("{arg}: {e}")))?,
        None => load_algebra(arg)?,
    };
    let report = g.validate();
    let n = g.basis_names();
    let (code, text) = match &report.violation {
        None => (0, format!("{}: Jacobi identity holds ({} triples checked)", g.name(), report.triples_checked)),
        Some(v) => (
            EXIT_NEGATIVE,
            format!(
                "{}: Jacobi identity fails on ({}, {}, {}), residual {}",
                g.name(),
                n[v.triple.0],
                n[v.triple.1],
                n[v.triple.2],
                compact(&g, &v.residual)
            ),
        ),
    };
    let violation = report.violation.as_ref().map(|v| {
        json!({
            "triple": [n[v.triple.0], n[v.triple.1], n[v.triple.2]],
            "residual": compact(&g, &v.residual),
        })
    });
    Ok(Outcome {
        code,
        report: json!({
            "algebra": g.name(),
            "status": if code == 0 { "VALID" } else { "INVALID" },
            "triples_checked": report.triples_checked,
            "violation": violation,
        }),
        text,
    })
}

fn info(arg: &str) -> Result<Outcome, CliError> {
    let g = load_algebra(arg)?;
    let s = g.series();
    let dims = |v: &[Subspace]| v.iter().map(Subspace::dim).collect::<Vec<_>>();
    let relations: Vec<String> = g
        .relations()
        .iter()
        .map(|(i, j, w)| format!("[{}, {}] = {}", g.basis_names()[*i], g.basis_names()[*j], compact(&g, w)))
        .collect();
    let filiform = g.is_filiform().ok();
    let report = json!({
        "algebra": g.name(),
        "status": "OK",
        "dim": g.dim(),
        "basis": g.basis_names(),
        "relations": relations,
        "derived": subspace_text(&g, &g.derived()),
        "center": subspace_text(&g, &s.center),
        "derived_series_dims": dims(&s.derived_series),
        "lower_central_series_dims": dims(&s.lower_central_series),
        "nilpotency_class": s.nilpotency_class,
        "filiform": filiform,
        "unimodular": g.is_unimodular(),
    });
    let mut text = format!("{} (dim {})\n", g.name(), g.dim());
    for r in &relations {
        text += &format!("  {r}\n");
    }
    text += &format!("derived algebra: {}\n", subspace_text(&g, &g.derived()));
    text += &format!("center: {}\n", subspace_text(&g, &s.center));
    text += &format!("derived series dims: {:?}\n", dims(&s.derived_series));
    text += &format!("lower central series dims: {:?}\n", dims(&s.lower_central_series));
    text += &match s.nilpotency_class {
        Some(c) => format!("nilpotent of class {c}{}\n", if filiform == Some(true) { ", filiform" } else { "" }),
        None => "not nilpotent\n".into(),
    };
    text += &format!("unimodular: {}", yes_no(g.is_unimodular()));
    Ok(Outcome { code: 0, report, text })
}

fn check_decomp(arg: &str, h: &str, v: &str, mutual: bool) -> Result<Outcome, CliError> {
    let g = load_algebra(arg)?;
    let d = Decomposition::new(&g, span(&g, h)?, span(&g, v)?).map_err(data)?;
    let a = d.analyze();
    let ok = a.respects && a.open && (!mutual || a.mutual);
    let mut report = json!({
        "algebra": g.name(),
        "status": if ok { "YES" } else { "NO" },
        "H": subspace_text(&g, d.h()),
        "V": subspace_text(&g, d.v()),
        "respects": a.respects,
        "open": a.open,
        "mutual": a.mutual,
        "h_is_subalgebra": a.h_is_subalgebra,
        "v_is_subalgebra": a.v_is_subalgebra,
    });
    let label = if mutual { "open mutually respectful" } else { "open respectful" };
    let mut text = format!("{label}: {}\n", yes_no(ok));
    text += &format!(
        "  respects: {}  open: {}  mutual: {}  H subalgebra: {}  V subalgebra: {}",
        yes_no(a.respects),
        yes_no(a.open),
        yes_no(a.mutual),
        yes_no(a.h_is_subalgebra),
        yes_no(a.v_is_subalgebra)
    );
    if a.respects {
        let induced: Vec<String> = a
            .induced_v
            .relations()
            .iter()
            .map(|(i, j, w)| {
                let n = a.induced_v.basis_names();
                format!("[{}, {}] = {}", n[*i], n[*j], format_compact(w, n))
            })
            .collect();
        let subspaces = [("H_V", &a.h_v), ("V_H", &a.v_h), ("K_H", &a.k_h), ("Vbar", &a.vbar), ("Hbar", &a.hbar)];
        for (k, s) in subspaces {
            report[k] = json!(subspace_text(&g, s));
            text += &format!("\n  {k} = {}", subspace_text(&g, s));
        }
        report["induced_v"] = json!(induced);
        report["induced_v_abelian"] = json!(a.induced_v_abelian);
        text += &format!("\n  induced algebra on V: {}", if induced.is_empty() { "abelian".into() } else { induced.join(", ") });
        if g.is_nilpotent() {
            report["hbar_type"] = json!(d.hbar_type().label());
            report["induced_type"] = json!(d.induced_type().label());
            text += &format!("\n  Hbar type: {}  induced type: {}", d.hbar_type().label(), d.induced_type().label());
        }
        let lji = check_lji(&d).map_err(data)?;
        text += "\n  lemma clauses:";
        for c in &lji.clauses {
            let state = if !c.applicable { "n/a" } else if c.holds { "holds" } else { "FAILS" };
            text += &format!("\n    ({}) {}: {state}", c.letter, c.description);
        }
        report["clauses"] = to_value(&lji.clauses);
        if g.dim() == 6 && a.open && d.h().dim() == 3 && g.is_nilpotent() {
            if let Ok(s) = structural_conditions_dim6(&d) {
                text += "\n  structural conclusions:";
                for c in &s.conclusions {
                    text += &format!("\n    {}: {}", c.name, if c.holds { "holds" } else { "FAILS" });
                }
                report["structural"] = to_value(&s.conclusions);
            }
        }
    }
    Ok(Outcome { code: if ok { 0 } else { EXIT_NEGATIVE }, report, text })
}

fn witness_json(g: &LieAlgebra, w: &Witness) -> Value {
    json!({ "H": subspace_text(g, &w.h), "V": subspace_text(g, &w.v) })
}

fn find(
    arg: &str,
    dim_v: usize,
    dim_h: Option<usize>,
    mutual: bool,
    v_subalgebra: bool,
    budget: Option<u64>,
) -> Result<Outcome, CliError> {
    let g = load_algebra(arg)?;
    let dim_h = match dim_h {
        Some(h) => h,
        None => g
            .dim()
            .checked_sub(dim_v)
            .ok_or_else(|| CliError::Usage(format!("dimV {dim_v} exceeds dim g = {}", g.dim())))?,
    };
    let mut opts = SearchOptions::from_env();
    opts.mutual = mutual;
    opts.v_subalgebra = v_subalgebra;
    if let Some(b) = budget {
        opts.budget = b;
    }
    let out = witness_search(&g, dim_h, dim_v, &opts)?;
    let (code, status) = match (&out.witness, &out.vacuous) {
        (Some(_), _) => (0, "FOUND"),
        (None, Some(_)) => (EXIT_NEGATIVE, "NONE_POSSIBLE"),
        (None, None) => (EXIT_UNKNOWN, "UNKNOWN"),
    };
    let report = json!({
        "algebra": g.name(),
        "status": status,
        "dim_h": dim_h,
        "dim_v": dim_v,
        "witness": out.witness.as_ref().map(|w| witness_json(&g, w)),
        "structured_candidates": out.structured_candidates,
        "random_candidates": out.random_candidates,
        "truncated": out.truncated,
        "vacuous": out.vacuous,
        "seed": opts.seed,
    });
    let text = match (&out.witness, &out.vacuous) {
        (Some(w), _) => format!("FOUND  H = {}  V = {}", subspace_text(&g, &w.h), subspace_text(&g, &w.v)),
        (None, Some(r)) => format!("NONE_POSSIBLE: {r}"),
        (None, None) => format!(
            "UNKNOWN: no witness among {} structured and {} random candidates{}",
            out.structured_candidates,
            out.random_candidates,
            if out.truncated { " (structured pass truncated)" } else { "" }
        ),
    };
    Ok(Outcome { code, report, text })
}

fn certificate_text(g: &LieAlgebra, c: &Certificate) -> String {
    match c {
        Certificate::DerivedDimLe1 { derived_dim } => format!("dim [g,g] = {derived_dim}"),
        Certificate::Codim1AbelianIdeal { functional } => {
            format!("kernel of functional ({}) is an abelian ideal", functional.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
        }
        Certificate::PencilAllRadicalsAbelian(p) => {
            format!("every radical abelian; {} strata", p.strata.len())
        }
        Certificate::TmainConditionFail { condition } => {
            let _ = g;
            format!("condition ({}) fails: {}", condition.letter(), condition.description())
        }
    }
}

fn status_code(s: Status) -> u8 {
    match s {
        Status::Exists => 0,
        Status::NotExists => EXIT_NEGATIVE,
        Status::Unknown => EXIT_UNKNOWN,
    }
}

fn decide_v2(arg: &str) -> Result<Outcome, CliError> {
    let g = load_algebra(arg)?;
    let verdict = v2_decide(&g, &SearchOptions::from_env())?;
    let replay = verdict.certificate.as_ref().map(|c| c.replay(&g).is_ok());
    let mut report = to_value(&verdict);
    report["algebra"] = json!(g.name());
    report["witness"] = verdict.witness.as_ref().map(|w| witness_json(&g, w)).unwrap_or(Value::Null);
    report["certificate_replayed"] = json!(replay);
    let mut text = format!("{}", verdict.status);
    if let Some(w) = &verdict.witness {
        text += &format!("  H = {}  V = {}", subspace_text(&g, &w.h), subspace_text(&g, &w.v));
    }
    if let Some(c) = &verdict.certificate {
        text += &format!("  certificate {}: {}", c.kind(), certificate_text(&g, c));
    }
    if let Some(n) = &verdict.note {
        text += &format!("  ({n})");
    }
    Ok(Outcome { code: status_code(verdict.status), report, text })
}

fn tmain(arg: &str) -> Result<Outcome, CliError> {
    let g = load_algebra(arg)?;
    let r = tmain_conditions(&g)?;
    let rows: Vec<Value> = r
        .values
        .iter()
        .map(|(c, v)| json!({ "condition": c.letter().to_string(), "description": c.description(), "holds": v }))
        .collect();
    let ok = r.all_hold();
    let mut text = format!("all conditions hold: {}", yes_no(ok));
    for (c, v) in &r.values {
        text += &format!("\n  ({}) {}: {}", c.letter(), c.description(), if *v { "holds" } else { "FAILS" });
    }
    Ok(Outcome {
        code: if ok { 0 } else { EXIT_NEGATIVE },
        report: json!({ "algebra": g.name(), "status": if ok { "ALL_HOLD" } else { "FAILS" }, "conditions": rows }),
        text,
    })
}

fn hyperplane(arg: &str) -> Result<Outcome, CliError> {
    let g = load_algebra(arg)?;
    let (code, report, text) = match abelian_hyperplane(&g) {
        Ok(HyperplaneAnswer::Yes { functional }) => {
            let phi: Vec<String> = functional.iter().map(ToString::to_string).collect();
            (0, json!({ "status": "YES", "functional": phi }), format!("YES: kernel of ({}) is an abelian ideal", phi.join(", ")))
        }
        Ok(HyperplaneAnswer::HighRank { derived_coordinate, rank }) => (
            EXIT_NEGATIVE,
            json!({ "status": "NO", "reason": "high_rank", "coordinate": g.basis_names()[derived_coordinate], "rank": rank }),
            format!("NO: the {} component of the bracket has rank {rank}", g.basis_names()[derived_coordinate]),
        ),
        Ok(HyperplaneAnswer::EmptyIntersection) => (
            EXIT_NEGATIVE,
            json!({ "status": "NO", "reason": "empty_intersection" }),
            "NO: no functional vanishing on [g,g] kills every bracket component".into(),
        ),
        Err(ExistenceError::Perfect) => (
            EXIT_NEGATIVE,
            json!({ "status": "NO", "reason": "perfect" }),
            "NO: the algebra is perfect, so it has no ideal of codimension one".into(),
        ),
        Err(e) => return Err(data(e)),
    };
    let mut report = report;
    report["algebra"] = json!(g.name());
    Ok(Outcome { code, report, text })
}

fn parse_gram(text: &str, n: usize) -> Result<Matrix, CliError> {
    let mut rows: Vec<Vector> = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<Scalar>().map_err(|_| CliError::Data(format!("gram line {}: bad entry {t:?}", k + 1))))
            .collect::<Result<Vector, _>>()?;
        rows.push(row);
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Data(format!("gram matrix must be {n}x{n}")));
    }
    Matrix::from_rows(&rows, n).map_err(data)
}

fn geodesic(arg: &str, vector: &str, gram: Option<&str>) -> Result<Outcome, CliError> {
    let g = load_algebra(arg)?;
    let v = parse_linear_combination(vector, g.basis_names()).map_err(data)?;
    let m = match gram {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
            MetricLieAlgebra::new(g.clone(), parse_gram(&text, g.dim())?).map_err(data)?
        }
        None => MetricLieAlgebra::standard(g.clone()),
    };
    let geo = is_geodesic(&m, &v).map_err(data)?;
    let admissible = geodesic_admissible(&g, &v).map_err(data)?;
    let text = format!(
        "geodesic for this metric: {}\nadmissible (geodesic for some metric): {}",
        yes_no(geo),
        yes_no(admissible)
    );
    Ok(Outcome {
        code: if geo { 0 } else { EXIT_NEGATIVE },
        report: json!({
            "algebra": g.name(),
            "status": if geo { "GEODESIC" } else { "NOT_GEODESIC" },
            "vector": compact(&g, &v),
            "geodesic": geo,
            "admissible": admissible,
            "standard_metric": gram.is_none(),
        }),
        text,
    })
}

fn tables() -> Outcome {
    let r = reproduce_tables(&SearchOptions::from_env());
    let mut report = to_value(&r);
    report["status"] = json!(if r.ok() { "OK" } else { "FAILED" });
    Outcome { code: if r.ok() { 0 } else { EXIT_NEGATIVE }, text: r.render_text(), report }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Validate { algebra } => validate(algebra),
        Command::Info { algebra } => info(algebra),
        Command::CheckDecomp { algebra, h, v, mutual } => check_decomp(algebra, h, v, *mutual),
        Command::Find { algebra, dim_v, dim_h, mutual, v_subalgebra, budget } => {
            find(algebra, *dim_v, *dim_h, *mutual, *v_subalgebra, *budget)
        }
        Command::DecideV2 { algebra } => decide_v2(algebra),
        Command::Tmain { algebra } => tmain(algebra),
        Command::AbelianHyperplane { algebra } => hyperplane(algebra),
        Command::Geodesic { algebra, vector, gram } => geodesic(algebra, vector, gram.as_deref()),
        Command::Tables => Ok(tables()),
    }
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(o) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(&o.report).expect("json"));
            } else {
                emit(o.text.trim_end());
            }
            ExitCode::from(o.code)
        }
        Err(e) => {
            let (CliError::Usage(m) | CliError::Data(m)) = &e;
            if cli.json {
                emit(&json!({ "status": "ERROR", "error": m }).to_string());
            }
            eprintln!("respect-kit: {m}");
            ExitCode::from(e.code())
        }
    }
}
