//! Witness search: a deterministic structured pass over small integer
//! vectors followed by a seeded random pass. Candidates are filtered mod p
//! and every hit is verified exactly before it is returned.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::modp::{self, Echelon, ModpAlgebra, Vm};
use super::{construct_h_from_v, v2_conditions_unchecked, ExistenceError, Witness};
use crate::decomp::Decomposition;
use crate::exactlin::{Scalar, Subspace, Vector};
use crate::liealg::LieAlgebra;

pub const DEFAULT_BUDGET: u64 = 100_000;
/// Seed of the random pass unless overridden.
pub const DEFAULT_SEED: u64 = 0x7265_7370_6563_7401;
/// Environment variable overriding the seed.
pub const SEED_ENV: &str = "RESPECT_KIT_SEED";
/// Cap on closure computations in one structured pass.
const STRUCTURED_NODE_LIMIT: u64 = 3_000_000;
/// Random coefficients are drawn from `-COEFF..=COEFF`.
const COEFF: i64 = 3;

#[derive(Debug, Clone, Serialize)]
pub struct SearchOptions {
    /// Also require `[H, V] ⊆ V`.
    pub mutual: bool,
    /// Require `V` to be a subalgebra instead of requiring openness.
    pub v_subalgebra: bool,
    /// Random candidates after the structured pass.
    pub budget: u64,
    pub seed: u64,
    pub structured: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mutual: false,
            v_subalgebra: false,
            budget: DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
            structured: true,
        }
    }
}

impl SearchOptions {
    /// Defaults with the seed taken from `RESPECT_KIT_SEED` when it parses.
    pub fn from_env() -> Self {
        let seed = std::env::var(SEED_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_SEED);
        SearchOptions { seed, ..Self::default() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub witness: Option<Witness>,
    pub structured_candidates: u64,
    pub random_candidates: u64,
    /// Set when the structured pass hit its node limit.
    pub truncated: bool,
    /// Reason the split admits no candidate at all, if any.
    pub vacuous: Option<String>,
}

impl SearchOutcome {
    fn empty() -> Self {
        SearchOutcome {
            witness: None,
            structured_candidates: 0,
            random_candidates: 0,
            truncated: false,
            vacuous: None,
        }
    }

    pub fn trials(&self) -> u64 {
        self.structured_candidates + self.random_candidates
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub(crate) struct Combinations {
    n: usize,
    cur: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations { n, cur: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let k = self.cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.cur[i] < self.n - k + i {
                self.cur[i] += 1;
                for j in i + 1..k {
                    self.cur[j] = self.cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Integer vectors on the given coordinates, in tiers: unit vectors, then
/// `e_i ± e_j`, then `e_i ± 2 e_j`. Returns the vectors and tier ends.
fn pool(coords: &[usize], n: usize) -> (Vec<Vec<i64>>, Vec<usize>) {
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut out: Vec<Vec<i64>> = coords.iter().map(|&i| unit(i)).collect();
    let mut ends = vec![out.len()];
    for &(s, ordered) in &[(1i64, false), (2i64, true)] {
        for (a, &i) in coords.iter().enumerate() {
            for (b, &j) in coords.iter().enumerate() {
                if a == b || (!ordered && b < a) {
                    continue;
                }
                for sign in [1, -1] {
                    let mut v = unit(i);
                    v[j] = sign * s;
                    out.push(v);
                }
            }
        }
        ends.push(out.len());
    }
    (out, ends)
}

fn to_exact(v: &[i64]) -> Vector {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}

/// Smallest subspace containing `seeds` and invariant under `ad v` for
/// every `v` in `V`.
pub fn invariant_closure(g: &LieAlgebra, v: &Subspace, seeds: &[Vector]) -> Subspace {
    let n = g.dim();
    let mut w = Subspace::span(seeds, n).expect("lengths");
    loop {
        let next = w.sum(&g.subspace_bracket(v, &w)).expect("ambient");
        if next.dim() == w.dim() {
            return w;
        }
        w = next;
    }
}

struct Ctx<'a> {
    g: &'a LieAlgebra,
    alg: ModpAlgebra,
    dim_h: usize,
    opts: &'a SearchOptions,
}

/// State of a partially built `H` for a fixed `V`.
#[derive(Clone)]
struct Partial {
    w: Echelon,
    wv: Echelon,
    seeds: Vec<Vec<i64>>,
}

impl Ctx<'_> {
    fn closed(&self, rows: &[Vm], e: &Echelon) -> bool {
        for a in 0..rows.len() {
            for b in a + 1..rows.len() {
                if !e.contains(&self.alg.bracket(&rows[a], &rows[b])) {
                    return false;
                }
            }
        }
        true
    }

    fn v_acceptable(&self, vrows: &[Vm], ve: &Echelon) -> bool {
        self.closed(vrows, ve) == self.opts.v_subalgebra
    }

    /// Adds `x` and closes under `ad V`; `None` if the result meets `V` or
    /// is too large.
    fn extend(&self, vrows: &[Vm], p: &Partial, x: &[i64]) -> Option<Partial> {
        let xm = modp::from_ints(x);
        if p.wv.contains(&xm) {
            return None;
        }
        let mut out = p.clone();
        let mut queue = vec![xm];
        while let Some(y) = queue.pop() {
            if !out.w.insert(&y) {
                continue;
            }
            if !out.wv.insert(&y) || out.w.dim() > self.dim_h {
                return None;
            }
            for v in vrows {
                queue.push(self.alg.bracket(v, &y));
            }
        }
        out.seeds.push(x.to_vec());
        Some(out)
    }

    /// Final filter mod p, then exact verification.
    fn leaf(&self, vrows: &[Vm], ve: &Echelon, vints: &[Vec<i64>], p: &Partial) -> Option<Witness> {
        let hrows: Vec<Vm> = p.w.rows().cloned().collect();
        if !self.opts.v_subalgebra && self.closed(&hrows, &p.w) {
            return None;
        }
        if self.opts.mutual {
            for h in &hrows {
                for v in vrows {
                    if !ve.contains(&self.alg.bracket(h, v)) {
                        return None;
                    }
                }
            }
        }
        self.verify(vints, &p.seeds)
    }

    fn verify(&self, vints: &[Vec<i64>], seeds: &[Vec<i64>]) -> Option<Witness> {
        let n = self.g.dim();
        let v = Subspace::span(&vints.iter().map(|x| to_exact(x)).collect::<Vec<_>>(), n).ok()?;
        let seeds: Vec<Vector> = seeds.iter().map(|x| to_exact(x)).collect();
        let h = invariant_closure(self.g, &v, &seeds);
        let d = Decomposition::new(self.g, h.clone(), v.clone()).ok()?;
        let a = d.analyze();
        let ok = if self.opts.v_subalgebra {
            a.respects && a.v_is_subalgebra
        } else {
            a.open
        };
        (ok && (!self.opts.mutual || a.mutual) && h.dim() == self.dim_h).then_some(Witness { h, v })
    }

    fn v_echelon(&self, vints: &[Vec<i64>]) -> Option<(Vec<Vm>, Echelon)> {
        let mut e = Echelon::new(self.alg.dim());
        for x in vints {
            if !e.insert(&modp::from_ints(x)) {
                return None;
            }
        }
        let rows = e.rows().cloned().collect();
        Some((rows, e))
    }

    fn dfs(
        &self,
        vrows: &[Vm],
        ve: &Echelon,
        vints: &[Vec<i64>],
        pool: &[Vec<i64>],
        p: &Partial,
        start: usize,
        seen: &mut HashSet<Vec<u64>>,
        nodes: &mut u64,
    ) -> Option<Witness> {
        if p.w.dim() == self.dim_h {
            return self.leaf(vrows, ve, vints, p);
        }
        for idx in start..pool.len() {
            if *nodes >= STRUCTURED_NODE_LIMIT {
                return None;
            }
            *nodes += 1;
            let Some(next) = self.extend(vrows, p, &pool[idx]) else { continue };
            if !seen.insert(next.w.key()) {
                continue;
            }
            if let Some(w) = self.dfs(vrows, ve, vints, pool, &next, idx + 1, seen, nodes) {
                return Some(w);
            }
        }
        None
    }

    fn random_vector(&self, rng: &mut ChaCha8Rng) -> Vec<i64> {
        (0..self.alg.dim()).map(|_| rng.random_range(-COEFF..=COEFF)).collect()
    }
}

fn vacuous_reason(dim_h: usize, dim_v: usize, opts: &SearchOptions) -> Option<String> {
    if opts.v_subalgebra {
        return (dim_v == 0 || dim_h == 0).then(|| "H and V must be nonzero".into());
    }
    if dim_h < 2 || dim_v < 2 {
        return Some("subspaces of dimension at most 1 are subalgebras, so no split is open".into());
    }
    None
}

/// Searches for a verified decomposition `g = H ⊕ V` with the given
/// dimensions: open respectful by default, mutual when requested, or
/// respectful with `V` a subalgebra.
pub fn witness_search(
    g: &LieAlgebra,
    dim_h: usize,
    dim_v: usize,
    opts: &SearchOptions,
) -> Result<SearchOutcome, ExistenceError> {
    let n = g.dim();
    if dim_h + dim_v != n {
        return Err(ExistenceError::SplitMismatch { sum: dim_h + dim_v, n });
    }
    let mut out = SearchOutcome::empty();
    if let Some(reason) = vacuous_reason(dim_h, dim_v, opts) {
        out.vacuous = Some(reason);
        return Ok(out);
    }
    let alg = ModpAlgebra::new(g)
        .ok_or_else(|| ExistenceError::Precondition(format!("search needs dimension at most {} and structure constants invertible mod p", modp::MAXN)))?;
    let ctx = Ctx { g, alg, dim_h, opts };
    let empty = Partial { w: Echelon::new(n), wv: Echelon::new(n), seeds: Vec::new() };

    if opts.structured {
        let coords: Vec<usize> = (0..n).collect();
        let (pool, ends) = pool(&coords, n);
        let mut seen_v: HashSet<Vec<u64>> = HashSet::new();
        let mut nodes = 0u64;
        let mut prev = 0;
        for &end in &ends {
            for combo in Combinations::new(end, dim_v) {
                if combo.last().is_some_and(|&l| l < prev) {
                    continue;
                }
                let vints: Vec<Vec<i64>> = combo.iter().map(|&i| pool[i].clone()).collect();
                let Some((vrows, ve)) = ctx.v_echelon(&vints) else { continue };
                if !seen_v.insert(ve.key()) {
                    continue;
                }
                out.structured_candidates += 1;
                if !ctx.v_acceptable(&vrows, &ve) {
                    continue;
                }
                let start = Partial { wv: ve.clone(), ..empty.clone() };
                let mut seen = HashSet::new();
                if let Some(w) = ctx.dfs(&vrows, &ve, &vints, &pool[..end], &start, 0, &mut seen, &mut nodes) {
                    out.witness = Some(w);
                    return Ok(out);
                }
                if nodes >= STRUCTURED_NODE_LIMIT {
                    out.truncated = true;
                    break;
                }
            }
            if out.truncated {
                break;
            }
            prev = end;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.budget {
        out.random_candidates += 1;
        let vints: Vec<Vec<i64>> = (0..dim_v).map(|_| ctx.random_vector(&mut rng)).collect();
        let Some((vrows, ve)) = ctx.v_echelon(&vints) else { continue };
        if !ctx.v_acceptable(&vrows, &ve) {
            continue;
        }
        let mut p = Partial { wv: ve.clone(), ..empty.clone() };
        let mut tries = 0;
        while p.w.dim() < dim_h && tries < 2 * dim_h {
            tries += 1;
            let x = ctx.random_vector(&mut rng);
            if let Some(next) = ctx.extend(&vrows, &p, &x) {
                p = next;
            }
        }
        if p.w.dim() == dim_h {
            if let Some(w) = ctx.leaf(&vrows, &ve, &vints, &p) {
                out.witness = Some(w);
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// Search for a 2-dimensional `V` meeting the `dim V = 2` conditions: first
/// over vectors supported on non-central basis coordinates, then over all
/// coordinates, then at random. The returned `H` is constructed from `V`.
pub fn search_v2(g: &LieAlgebra, opts: &SearchOptions) -> SearchOutcome {
    let n = g.dim();
    let mut out = SearchOutcome::empty();
    if n < 3 {
        out.vacuous = Some("dim g < 3".into());
        return out;
    }
    let Some(alg) = ModpAlgebra::new(g) else {
        out.vacuous = Some(format!("search needs dimension at most {} and structure constants invertible mod p", modp::MAXN));
        return out;
    };
    let derived_dim = g.derived().dim();
    let units: Vec<Vm> = (0..n)
        .map(|i| {
            let mut e = [0u64; modp::MAXN];
            e[i] = 1;
            e
        })
        .collect();
    let passes_modp = |a: &[i64], b: &[i64]| -> bool {
        let (am, bm) = (modp::from_ints(a), modp::from_ints(b));
        if modp::is_zero(&alg.bracket(&am, &bm)) {
            return false;
        }
        let mut w = Echelon::new(n);
        for e in &units {
            w.insert(&alg.bracket(&am, e));
            w.insert(&alg.bracket(&bm, e));
        }
        if w.dim() >= derived_dim {
            return false;
        }
        let mut wv = w.clone();
        wv.insert(&am) && wv.insert(&bm)
    };
    let exact = |a: &[i64], b: &[i64]| -> Option<Witness> {
        let v = Subspace::span(&[to_exact(a), to_exact(b)], n).ok()?;
        if v.dim() != 2 || !v2_conditions_unchecked(g, &v).all() {
            return None;
        }
        let h = construct_h_from_v(g, &v).ok()?;
        Some(Witness { h, v })
    };

    if opts.structured {
        let center = g.center();
        let noncentral: Vec<usize> = (0..n)
            .filter(|&i| !center.contains_vector(&crate::exactlin::unit_vector(n, i)))
            .collect();
        let all: Vec<usize> = (0..n).collect();
        let mut seen: HashSet<(Vec<i64>, Vec<i64>)> = HashSet::new();
        for coords in [&noncentral, &all] {
            let (pool, ends) = pool(coords, n);
            let mut prev = 0;
            for &end in &ends {
                for combo in Combinations::new(end, 2) {
                    if combo[1] < prev {
                        continue;
                    }
                    let (a, b) = (&pool[combo[0]], &pool[combo[1]]);
                    if !seen.insert((a.clone(), b.clone())) {
                        continue;
                    }
                    out.structured_candidates += 1;
                    if passes_modp(a, b) {
                        if let Some(w) = exact(a, b) {
                            out.witness = Some(w);
                            return out;
                        }
                    }
                }
                prev = end;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.budget {
        out.random_candidates += 1;
        let a: Vec<i64> = (0..n).map(|_| rng.random_range(-COEFF..=COEFF)).collect();
        let b: Vec<i64> = (0..n).map(|_| rng.random_range(-COEFF..=COEFF)).collect();
        if passes_modp(&a, &b) {
            if let Some(w) = exact(&a, &b) {
                out.witness = Some(w);
                return out;
            }
        }
    }
    out
}
