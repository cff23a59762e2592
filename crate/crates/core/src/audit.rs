//! Structural-law audit over exhaustively enumerated small graphs.
//!
//! Every connected graph up to a chosen order (≤ 7) is enumerated up to
//! isomorphism, solved exactly, and checked against each closed-form law the
//! library implements: value characterizations, bound chains, block
//! composition, sparse colorings, and the extremal size formulas. Each law
//! reports one pass/fail/skip line; a failure always carries a graph6
//! counterexample so it can be reproduced independently. A check that runs
//! out of its time budget reports "skipped", never "pass".

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::blocks::block_decomposition;
use crate::coloring::VertexColoring;
use crate::connectivity::{connectivity, upper_connectivity};
use crate::enumerate::{
    canonical_key, connected_representatives, EnumerateError, MAX_ENUMERATION_ORDER,
};
use crate::extremal::{gen_gk, gen_h, gen_triangle_blocks, max_size_bounds, min_size};
use crate::families::{cactus_coloring, family_coloring, family_value, FamilySpec};
use crate::girth::girth;
use crate::graph::{Graph, GraphError};
use crate::graph6;
use crate::rainbow::{find_rainbow_cut, is_rainbow, is_vertex_cut, verify_coloring};
use crate::solver::{
    compose_block_colorings, rvd_exact_flat_with, rvd_exact_with, SolverError, SolverOptions,
    DEFAULT_CAP,
};
use crate::sparse::sparse_coloring;
use crate::sparse::{find_removable_cycle, SparseError};

/// Seed used when `RVDKIT_SEED` is unset.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Environment variable that fixes the seed of sampled-coloring checks.
pub const SEED_ENV: &str = "RVDKIT_SEED";

/// Sampled colorings per graph in the cut-oracle check.
const COLORING_SAMPLES: usize = 100;

pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

#[derive(Debug, Error)]
pub enum AuditError {
    #[error("audit enumerates graphs up to order {MAX_ENUMERATION_ORDER}, got n_max = {n}")]
    OrderOutOfRange { n: usize },
    #[error("unknown check `{name}`; known checks: {known}")]
    UnknownCheck { name: String, known: String },
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone)]
pub struct AuditOptions {
    /// Largest order enumerated, 1 ..= 7.
    pub n_max: usize,
    /// Solver cap passed through to per-block searches.
    pub cap: usize,
    /// Wall-clock budget per check. An expired check reports
    /// [`CheckStatus::Skipped`]; a failure found before expiry still fails.
    pub budget: Option<Duration>,
    /// Names of checks to run; `None` runs all of them.
    pub selection: Option<BTreeSet<String>>,
    /// Seed for sampled colorings (see [`SEED_ENV`]).
    pub seed: u64,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            n_max: 6,
            cap: DEFAULT_CAP,
            budget: None,
            selection: None,
            seed: seed_from_env(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
    /// graph6 of a violating graph; present exactly when the status is Fail.
    pub counterexample: Option<String>,
    pub elapsed_ms: u128,
}

/// Aggregate over one (order, value) cell of the solved catalog.
#[derive(Debug, Clone, Serialize)]
pub struct RvdCell {
    pub n: usize,
    pub value: usize,
    pub classes: usize,
    pub min_edges: usize,
    pub min_graph6: String,
    pub max_edges: usize,
    pub max_graph6: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub n_max: usize,
    pub seed: u64,
    pub classes: usize,
    pub cells: Vec<RvdCell>,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u128,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "audit: all connected graphs with 1 ≤ n ≤ {} ({} isomorphism classes), seed {}\n\n",
            self.n_max, self.classes, self.seed
        ));
        out.push_str("value distribution (classes, edge range):\n");
        for cell in &self.cells {
            out.push_str(&format!(
                "  n={} rvd={}: {} classes, {}..{} edges\n",
                cell.n, cell.value, cell.classes, cell.min_edges, cell.max_edges
            ));
        }
        out.push_str("\nchecks:\n");
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            out.push_str(&format!(
                "  {tag} {:<28} {} [{} ms]\n",
                c.name, c.detail, c.elapsed_ms
            ));
            if let Some(g6) = &c.counterexample {
                out.push_str(&format!("       counterexample: {g6}\n"));
            }
        }
        let passed = self.count(CheckStatus::Pass);
        let failed = self.count(CheckStatus::Fail);
        let skipped = self.count(CheckStatus::Skipped);
        out.push_str(&format!(
            "\nresult: {} — {passed} passed, {failed} failed, {skipped} skipped [{} ms]\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.elapsed_ms
        ));
        out
    }

    fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

// ---------------------------------------------------------------------------
// Solved catalog.

struct Solved {
    graph: Graph,
    graph6: String,
    key: u64,
    value: usize,
}

struct Catalog {
    n_max: usize,
    per_n: Vec<Vec<Solved>>,
    /// (order, canonical key) -> value, for subgraph lookups.
    values: HashMap<(usize, u64), usize>,
    cells: BTreeMap<(usize, usize), RvdCell>,
}

impl Catalog {
    fn build(n_max: usize, cap: usize) -> Result<Self, AuditError> {
        let mut per_n: Vec<Vec<Solved>> = vec![Vec::new()];
        for n in 1..=n_max {
            let reps = connected_representatives(n)?;
            let solved: Result<Vec<Solved>, AuditError> = reps
                .into_par_iter()
                .map(|graph| {
                    let r = rvd_exact_with(&graph, SolverOptions { cap })?;
                    Ok(Solved {
                        graph6: graph6::encode(&graph).expect("order ≤ 7 encodes"),
                        key: canonical_key(&graph)?,
                        value: r.value,
                        graph,
                    })
                })
                .collect();
            per_n.push(solved?);
        }
        let mut values = HashMap::new();
        let mut cells: BTreeMap<(usize, usize), RvdCell> = BTreeMap::new();
        for (n, level) in per_n.iter().enumerate().skip(1) {
            for s in level {
                values.insert((n, s.key), s.value);
                let m = s.graph.m();
                cells
                    .entry((n, s.value))
                    .and_modify(|cell| {
                        cell.classes += 1;
                        if m < cell.min_edges {
                            cell.min_edges = m;
                            cell.min_graph6 = s.graph6.clone();
                        }
                        if m > cell.max_edges {
                            cell.max_edges = m;
                            cell.max_graph6 = s.graph6.clone();
                        }
                    })
                    .or_insert_with(|| RvdCell {
                        n,
                        value: s.value,
                        classes: 1,
                        min_edges: m,
                        min_graph6: s.graph6.clone(),
                        max_edges: m,
                        max_graph6: s.graph6.clone(),
                    });
            }
        }
        Ok(Catalog { n_max, per_n, values, cells })
    }

    fn classes(&self) -> usize {
        self.per_n.iter().map(Vec::len).sum()
    }
}

// ---------------------------------------------------------------------------
// Check plumbing.

#[derive(Clone, Copy)]
struct Deadline(Option<Instant>);

impl Deadline {
    fn new(budget: Option<Duration>) -> Self {
        Deadline(budget.map(|b| Instant::now() + b))
    }

    fn expired(&self) -> bool {
        self.0.is_some_and(|t| Instant::now() >= t)
    }
}

struct Ctx {
    cap: usize,
    seed: u64,
    deadline: Deadline,
}

enum Outcome {
    Pass(String),
    Fail { counterexample: String, detail: String },
    Skipped(String),
}

/// Walk the solved graphs with lo ≤ n ≤ hi (clamped to the catalog), failing
/// on the first graph whose closure errs and skipping on deadline expiry.
fn scan(
    cat: &Catalog,
    lo: usize,
    hi: usize,
    ctx: &Ctx,
    f: &mut dyn FnMut(&Solved) -> Result<(), String>,
) -> Result<usize, Outcome> {
    let mut checked = 0;
    for n in lo..=hi.min(cat.n_max) {
        for s in &cat.per_n[n] {
            if ctx.deadline.expired() {
                return Err(Outcome::Skipped(format!(
                    "time budget exhausted after {checked} graphs"
                )));
            }
            if let Err(detail) = f(s) {
                return Err(Outcome::Fail { counterexample: s.graph6.clone(), detail });
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn err_str(e: impl std::fmt::Display) -> String {
    format!("unexpected error: {e}")
}

// ---------------------------------------------------------------------------
// Checks over the solved catalog.

fn check_bounds(cat: &Catalog, ctx: &Ctx) -> Outcome {
    // Connectivity is defined over vertex pairs, so the chain starts at n = 2.
    match scan(cat, 2, cat.n_max, ctx, &mut |s| {
        let k = connectivity(&s.graph).map_err(err_str)?;
        let ku = upper_connectivity(&s.graph).map_err(err_str)?;
        if k <= ku && ku <= s.value && s.value <= s.graph.n() {
            Ok(())
        } else {
            Err(format!(
                "chain broken: κ = {k}, κ⁺ = {ku}, rvd = {}, n = {}",
                s.value,
                s.graph.n()
            ))
        }
    }) {
        Err(o) => o,
        Ok(count) => Outcome::Pass(format!("κ ≤ κ⁺ ≤ rvd ≤ n on {count} graphs")),
    }
}

fn check_tree_characterization(cat: &Catalog, ctx: &Ctx) -> Outcome {
    match scan(cat, 1, cat.n_max, ctx, &mut |s| {
        let is_tree = s.graph.m() + 1 == s.graph.n();
        if (s.value == 1) == is_tree {
            Ok(())
        } else {
            Err(format!("rvd = {}, tree = {is_tree}", s.value))
        }
    }) {
        Err(o) => o,
        Ok(count) => Outcome::Pass(format!("rvd = 1 exactly on trees, {count} graphs")),
    }
}

fn is_cactus(g: &Graph) -> Result<bool, String> {
    let dec = block_decomposition(g).map_err(err_str)?;
    for block in &dec.blocks {
        if block.len() <= 2 {
            continue;
        }
        let sub = g.induced(block).map_err(err_str)?;
        let h = sub.graph;
        if h.m() != h.n() || h.vertices().any(|v| h.degree(v) != 2) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_cactus_characterization(cat: &Catalog, ctx: &Ctx) -> Outcome {
    match scan(cat, 1, cat.n_max, ctx, &mut |s| {
        let has_cycle = s.graph.m() >= s.graph.n();
        let expect = has_cycle && is_cactus(&s.graph)?;
        if (s.value == 2) == expect {
            Ok(())
        } else {
            Err(format!(
                "rvd = {}, cactus with a cycle = {expect}",
                s.value
            ))
        }
    }) {
        Err(o) => o,
        Ok(count) => Outcome::Pass(format!(
            "rvd = 2 exactly on cactus graphs with a cycle, {count} graphs"
        )),
    }
}

fn deficient_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in g.vertices() {
        for y in x + 1..g.n() {
            if g.common_neighbors(x, y).len() < 2 {
                out.push((x, y));
            }
        }
    }
    out
}

fn check_full_value_characterization(cat: &Catalog, ctx: &Ctx) -> Outcome {
    match scan(cat, 1, cat.n_max, ctx, &mut |s| {
        let all_pairs_rich = deficient_pairs(&s.graph).is_empty();
        if (s.value == s.graph.n()) == all_pairs_rich {
            Ok(())
        } else {
            Err(format!(
                "rvd = {} of n = {}, every pair has ≥ 2 common neighbors = {all_pairs_rich}",
                s.value,
                s.graph.n()
            ))
        }
    }) {
        Err(o) => o,
        Ok(count) => Outcome::Pass(format!(
            "rvd = n exactly when every pair has ≥ 2 common neighbors, {count} graphs"
        )),
    }
}

fn check_near_full_implication(cat: &Catalog, ctx: &Ctx) -> Outcome {
    let mut hits = 0;
    match scan(cat, 2, cat.n_max, ctx, &mut |s| {
        if deficient_pairs(&s.graph).len() != 1 {
            return Ok(());
        }
        hits += 1;
        if s.value == s.graph.n() - 1 {
            Ok(())
        } else {
            Err(format!("one deficient pair but rvd = {} ≠ n − 1", s.value))
        }
    }) {
        Err(o) => o,
        Ok(count) => Outcome::Pass(format!(
            "one deficient pair forces rvd = n − 1; {hits} of {count} graphs in hypothesis"
        )),
    }
}

fn check_girth_bound(cat: &Catalog, ctx: &Ctx) -> Outcome {
    let mut hits = 0;
    match scan(cat, 1, cat.n_max, ctx, &mut |s| {
        let g = girth(&s.graph);
        if g < 4 {
            return Ok(());
        }
        hits += 1;
        if s.value <= s.graph.n() - g + 2 {
            Ok(())
        } else {
            Err(format!("girth {g} but rvd = {} > n − g + 2", s.value))
        }
    }) {
        Err(o) => o,
        Ok(count) => Outcome::Pass(format!(
            "girth ≥ 4 gives rvd ≤ n − girth + 2; {hits} of {count} graphs in hypothesis"
        )),
    }
}

fn check_triangle_free_bound(cat: &Catalog, ctx: &Ctx) -> Outcome {
    let mut hits = 0;
    match scan(cat, 3, cat.n_max, ctx, &mut |s| {
        if girth(&s.graph) == 3 {
            return Ok(());
        }
        hits += 1;
        if s.value <= s.graph.n() - 2 {
            Ok(())
        } else {
            Err(format!("triangle-free but rvd = {} > n − 2", s.value))
        }
    }) {
        Err(o) => o,
        Ok(count) => Outcome::Pass(format!(
            "triangle-free gives rvd ≤ n − 2; {hits} of {count} graphs in hypothesis"
        )),
    }
}

fn check_bipartite_tightness(_cat: &Catalog, ctx: &Ctx) -> Outcome {
    for n in 4..=8usize {
        if ctx.deadline.expired() {
            return Outcome::Skipped(format!("time budget exhausted before n = {n}"));
        }
        let spec = FamilySpec::Multipartite { parts: vec![2, n - 2] };
        let graph = match family_coloring(&spec) {
            Ok((g, _)) => g,
            Err(e) => {
                return Outcome::Fail {
                    counterexample: spec.describe(),
                    detail: err_str(e),
                }
            }
        };
        let solved = match rvd_exact_with(&graph, SolverOptions { cap: 9 }) {
            Ok(r) => r.value,
            Err(e) => {
                return Outcome::Fail {
                    counterexample: graph6::encode(&graph).unwrap_or_default(),
                    detail: err_str(e),
                }
            }
        };
        if solved != n - 2 {
            return Outcome::Fail {
                counterexample: graph6::encode(&graph).unwrap_or_default(),
                detail: format!("rvd(K_{{2,{}}}) = {solved}, expected {}", n - 2, n - 2),
            };
        }
    }
    Outcome::Pass("rvd(K_{2,n−2}) = n − 2 for 4 ≤ n ≤ 8, matching the triangle-free bound".into())
}

fn check_block_law(cat: &Catalog, ctx: &Ctx) -> Outcome {
    match scan(cat, 1, 6, ctx, &mut |s| {
        let flat = rvd_exact_flat_with(&s.graph, SolverOptions { cap: ctx.cap })
            .map_err(err_str)?;
        if flat.value == s.value {
            Ok(())
        } else {
            Err(format!(
                "flat search gives {}, block composition gives {}",
                flat.value, s.value
            ))
        }
    }) {
        Err(o) => o,
        Ok(count) => Outcome::Pass(format!(
            "whole-graph search agrees with per-block composition on {count} graphs (n ≤ 6)"
        )),
    }
}

fn check_monotonicity(cat: &Catalog, ctx: &Ctx) -> Outcome {
    let mut compared = 0usize;
    match scan(cat, 2, cat.n_max, ctx, &mut |s| {
        let g = &s.graph;
        for v in g.vertices() {
            let del = g.delete_vertices(&[v]).map_err(err_str)?;
            if !del.graph.connected() {
                continue;
            }
            let key = canonical_key(&del.graph).map_err(err_str)?;
            let sub_value = cat.values[&(del.graph.n(), key)];
            compared += 1;
            if sub_value > s.value {
                return Err(format!(
                    "deleting vertex {v} raises rvd from {} to {sub_value}",
                    s.value
                ));
            }
        }
        for (u, v) in g.edges() {
            let h = g.delete_edge(u, v).map_err(err_str)?;
            if !h.connected() {
                continue;
            }
            let key = canonical_key(&h).map_err(err_str)?;
            let sub_value = cat.values[&(h.n(), key)];
            compared += 1;
            if sub_value > s.value {
                return Err(format!(
                    "deleting edge ({u}, {v}) raises rvd from {} to {sub_value}",
                    s.value
                ));
            }
        }
        Ok(())
    }) {
        Err(o) => o,
        Ok(_) => Outcome::Pass(format!(
            "rvd never rises under single vertex or edge deletions, {compared} comparisons"
        )),
    }
}

fn check_sparse_budget(cat: &Catalog, ctx: &Ctx) -> Outcome {
    match scan(cat, 1, cat.n_max, ctx, &mut |s| {
        let c = sparse_coloring(&s.graph).map_err(err_str)?;
        let budget = s.graph.m() + 2 - s.graph.n();
        if c.max_color() <= budget {
            Ok(())
        } else {
            Err(format!(
                "verified coloring uses color {} beyond the m − n + 2 = {budget} budget",
                c.max_color()
            ))
        }
    }) {
        Err(o) => o,
        Ok(count) => Outcome::Pass(format!(
            "size-budget coloring verified with ≤ m − n + 2 colors on {count} graphs"
        )),
    }
}

fn check_removable_cycle(cat: &Catalog, ctx: &Ctx) -> Outcome {
    let mut hits = 0;
    match scan(cat, 4, cat.n_max, ctx, &mut |s| {
        if s.graph.min_degree() < 3 {
            return Ok(());
        }
        hits += 1;
        match find_removable_cycle(&s.graph) {
            Ok(_) => Ok(()),
            Err(SparseError::NoRemovableCycle) => {
                Err("no chordless cycle with connected complement found".into())
            }
            Err(e) => Err(err_str(e)),
        }
    }) {
        Err(o) => o,
        Ok(_) => Outcome::Pass(format!(
            "every graph with min degree ≥ 3 has a removable cycle, {hits} graphs in hypothesis"
        )),
    }
}

fn check_compose_blocks(cat: &Catalog, ctx: &Ctx) -> Outcome {
    let mut hits = 0;
    match scan(cat, 2, cat.n_max, ctx, &mut |s| {
        let dec = block_decomposition(&s.graph).map_err(err_str)?;
        if dec.blocks.len() < 2 {
            return Ok(());
        }
        hits += 1;
        let mut per_block = Vec::with_capacity(dec.blocks.len());
        for idx in 0..dec.blocks.len() {
            let sub = dec.block_subgraph(&s.graph, idx).map_err(err_str)?;
            let solved = rvd_exact_flat_with(&sub.graph, SolverOptions { cap: ctx.cap })
                .map_err(err_str)?;
            per_block.push(solved.witness);
        }
        let composed = compose_block_colorings(&s.graph, &per_block).map_err(err_str)?;
        if !verify_coloring(&s.graph, &composed).map_err(err_str)?.is_valid() {
            return Err("composed coloring failed verification".into());
        }
        if composed.palette_size() != s.value {
            return Err(format!(
                "composed palette {} differs from rvd = {}",
                composed.palette_size(),
                s.value
            ));
        }
        Ok(())
    }) {
        Err(o) => o,
        Ok(_) => Outcome::Pass(format!(
            "per-block witnesses compose into verified colorings on {hits} multi-block graphs"
        )),
    }
}

// ---------------------------------------------------------------------------
// Extremal size checks.

/// graph6 of the construction that should witness the (n, k) minimum size.
fn min_size_witness(n: usize, k: usize) -> String {
    let built = if k == n { gen_h(n).ok() } else { gen_gk(n, k).map(|(g, _)| g).ok() };
    built
        .and_then(|g| graph6::encode(&g).ok())
        .unwrap_or_default()
}

fn check_min_size(cat: &Catalog, ctx: &Ctx) -> Outcome {
    let mut cells = 0;
    for n in 4..=cat.n_max {
        for k in 1..=n {
            if ctx.deadline.expired() {
                return Outcome::Skipped(format!(
                    "time budget exhausted after {cells} (n, k) cells"
                ));
            }
            let want = match min_size(n, k) {
                Ok(w) => w,
                Err(e) => {
                    return Outcome::Fail {
                        counterexample: min_size_witness(n, k),
                        detail: err_str(e),
                    }
                }
            };
            cells += 1;
            match cat.cells.get(&(n, k)) {
                None => {
                    return Outcome::Fail {
                        counterexample: min_size_witness(n, k),
                        detail: format!(
                            "no graph of order {n} has rvd = {k}, yet the formula predicts \
                             a witness with {want} edges"
                        ),
                    }
                }
                Some(cell) if cell.min_edges < want => {
                    return Outcome::Fail {
                        counterexample: cell.min_graph6.clone(),
                        detail: format!(
                            "(n={n}, k={k}): graph with {} edges beats the formula value {want}",
                            cell.min_edges
                        ),
                    }
                }
                Some(cell) if cell.min_edges > want => {
                    return Outcome::Fail {
                        counterexample: min_size_witness(n, k),
                        detail: format!(
                            "(n={n}, k={k}): smallest observed size {} misses the formula \
                             value {want}",
                            cell.min_edges
                        ),
                    }
                }
                Some(_) => {}
            }
        }
    }
    Outcome::Pass(format!(
        "minimum size matches n + k − 2 (and the k = n formula) on {cells} cells"
    ))
}

fn check_max_size_exact(cat: &Catalog, ctx: &Ctx) -> Outcome {
    let mut cells = 0;
    let mut failures: Vec<(String, String)> = Vec::new();
    for n in 4..=cat.n_max {
        for k in 2..=3.min(n) {
            if ctx.deadline.expired() {
                return Outcome::Skipped(format!(
                    "time budget exhausted after {cells} (n, k) cells"
                ));
            }
            let want = match max_size_bounds(n, k) {
                Ok((lo, hi)) => {
                    debug_assert_eq!(lo, hi);
                    hi
                }
                Err(e) => {
                    failures.push((String::new(), err_str(e)));
                    continue;
                }
            };
            cells += 1;
            match cat.cells.get(&(n, k)) {
                None => failures.push((
                    String::new(),
                    format!("(n={n}, k={k}): no graph attains the value at all"),
                )),
                Some(cell) if cell.max_edges != want => failures.push((
                    cell.max_graph6.clone(),
                    format!(
                        "(n={n}, k={k}): claimed max {want}, observed {}",
                        cell.max_edges
                    ),
                )),
                Some(_) => {}
            }
        }
    }
    if let Some((g6, _)) = failures.first() {
        let detail = failures
            .iter()
            .map(|(_, d)| d.as_str())
            .collect::<Vec<_>>()
            .join("; ");
        return Outcome::Fail { counterexample: g6.clone(), detail };
    }
    Outcome::Pass(format!(
        "maximum size matches ⌊(k+1)(n−1)/2⌋ for k ∈ {{2, 3}} on {cells} cells"
    ))
}

fn check_max_size_interval(cat: &Catalog, ctx: &Ctx) -> Outcome {
    let mut cells = 0;
    for n in 4..=cat.n_max {
        for k in 4..=n {
            if ctx.deadline.expired() {
                return Outcome::Skipped(format!(
                    "time budget exhausted after {cells} (n, k) cells"
                ));
            }
            let (lo, hi) = match max_size_bounds(n, k) {
                Ok(b) => b,
                Err(e) => {
                    return Outcome::Fail {
                        counterexample: String::new(),
                        detail: err_str(e),
                    }
                }
            };
            cells += 1;
            let Some(cell) = cat.cells.get(&(n, k)) else {
                return Outcome::Fail {
                    counterexample: String::new(),
                    detail: format!("(n={n}, k={k}): no graph attains the value at all"),
                };
            };
            if cell.max_edges < lo || cell.max_edges > hi {
                return Outcome::Fail {
                    counterexample: cell.max_graph6.clone(),
                    detail: format!(
                        "(n={n}, k={k}): observed max {} outside [{lo}, {hi}]",
                        cell.max_edges
                    ),
                };
            }
        }
    }
    Outcome::Pass(format!(
        "maximum size lies in the k ≥ 4 interval on {cells} cells"
    ))
}

// ---------------------------------------------------------------------------
// Family checks.

fn ascending_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, min_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for p in min_part..=remaining {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Family instances whose closed-form value is within solver reach.
fn solver_checked_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 1..=9 {
        specs.push(FamilySpec::Tree { n });
    }
    for n in 3..=12 {
        specs.push(FamilySpec::Cycle { n });
    }
    for n in 1..=9 {
        specs.push(FamilySpec::Complete { n });
    }
    for rim in 4..=8 {
        specs.push(FamilySpec::Wheel { rim });
    }
    for n in 2..=9 {
        for parts in ascending_partitions(n) {
            let spec = FamilySpec::Multipartite { parts };
            if spec.validate().is_ok() {
                specs.push(spec);
            }
        }
    }
    specs
}

fn check_family_formulas(_cat: &Catalog, ctx: &Ctx) -> Outcome {
    let specs = solver_checked_specs();
    let total = specs.len();
    for (done, spec) in specs.into_iter().enumerate() {
        if ctx.deadline.expired() {
            return Outcome::Skipped(format!(
                "time budget exhausted after {done} of {total} instances"
            ));
        }
        let claimed = match family_value(&spec) {
            Ok(v) => v,
            Err(e) => {
                return Outcome::Fail { counterexample: spec.describe(), detail: err_str(e) }
            }
        };
        let (graph, _) = match family_coloring(&spec) {
            Ok(pair) => pair,
            Err(e) => {
                return Outcome::Fail { counterexample: spec.describe(), detail: err_str(e) }
            }
        };
        let solved = match rvd_exact_with(&graph, SolverOptions { cap: 12 }) {
            Ok(r) => r.value,
            Err(e) => {
                return Outcome::Fail {
                    counterexample: graph6::encode(&graph).unwrap_or_default(),
                    detail: format!("{}: {}", spec.describe(), err_str(e)),
                }
            }
        };
        if solved != claimed {
            return Outcome::Fail {
                counterexample: graph6::encode(&graph).unwrap_or_default(),
                detail: format!(
                    "{}: formula says {claimed}, solver says {solved}",
                    spec.describe()
                ),
            };
        }
    }
    Outcome::Pass(format!(
        "closed-form values agree with the exact solver on {total} family instances"
    ))
}

fn check_wheel_parity(_cat: &Catalog, ctx: &Ctx) -> Outcome {
    for rim in 4..=12usize {
        if ctx.deadline.expired() {
            return Outcome::Skipped(format!("time budget exhausted before rim = {rim}"));
        }
        let spec = FamilySpec::Wheel { rim };
        let want = if rim % 4 == 0 { 3 } else { 4 };
        let outcome = family_value(&spec).map_err(err_str).and_then(|v| {
            if v != want {
                return Err(format!("value {v}, expected {want}"));
            }
            let (g, c) = family_coloring(&spec).map_err(err_str)?;
            if c.palette_size() != want {
                return Err(format!("palette {} ≠ {want}", c.palette_size()));
            }
            if !verify_coloring(&g, &c).map_err(err_str)?.is_valid() {
                return Err("construction failed verification".into());
            }
            Ok(())
        });
        if let Err(detail) = outcome {
            return Outcome::Fail {
                counterexample: spec.describe(),
                detail: format!("rim {rim}: {detail}"),
            };
        }
    }
    Outcome::Pass("wheel value is 3 exactly when 4 divides the rim, rims 4..=12 verified".into())
}

/// Instances exercised only through verified constructions (no solver).
fn check_family_colorings(_cat: &Catalog, ctx: &Ctx) -> Outcome {
    let mut specs: Vec<FamilySpec> = vec![
        FamilySpec::Tree { n: 10 },
        FamilySpec::Tree { n: 30 },
        FamilySpec::Cycle { n: 10 },
        FamilySpec::Cycle { n: 21 },
        FamilySpec::Cycle { n: 30 },
        FamilySpec::Complete { n: 10 },
        FamilySpec::Complete { n: 14 },
    ];
    for parts in ascending_partitions(14) {
        let spec = FamilySpec::Multipartite { parts };
        if spec.validate().is_ok() {
            specs.push(spec);
        }
    }
    let total = specs.len();
    for (done, spec) in specs.into_iter().enumerate() {
        if ctx.deadline.expired() {
            return Outcome::Skipped(format!(
                "time budget exhausted after {done} of {total} constructions"
            ));
        }
        let outcome = family_value(&spec).map_err(err_str).and_then(|want| {
            let (g, c) = family_coloring(&spec).map_err(err_str)?;
            if c.palette_size() != want {
                return Err(format!("palette {} ≠ value {want}", c.palette_size()));
            }
            if !verify_coloring(&g, &c).map_err(err_str)?.is_valid() {
                return Err("construction failed verification".into());
            }
            Ok(())
        });
        if let Err(detail) = outcome {
            return Outcome::Fail {
                counterexample: spec.describe(),
                detail: format!("{}: {detail}", spec.describe()),
            };
        }
    }
    // Cactus chains: two colors suffice on triangle blocks at larger orders.
    for n in [20usize, 29, 30] {
        if ctx.deadline.expired() {
            return Outcome::Skipped("time budget exhausted before cactus constructions".into());
        }
        let outcome = gen_triangle_blocks(n).map_err(err_str).and_then(|g| {
            let c = cactus_coloring(&g).map_err(err_str)?;
            if c.palette_size() != 2 {
                return Err(format!("palette {} ≠ 2", c.palette_size()));
            }
            Ok(())
        });
        if let Err(detail) = outcome {
            return Outcome::Fail {
                counterexample: format!("triangle blocks, n = {n}"),
                detail,
            };
        }
    }
    Outcome::Pass(format!(
        "{total} closed-form colorings verified at orders beyond the solver, plus cactus chains"
    ))
}

// ---------------------------------------------------------------------------
// Cut-oracle equivalence under sampled colorings.

fn naive_rainbow_cut_exists(
    g: &Graph,
    c: &VertexColoring,
    x: usize,
    y: usize,
) -> Result<bool, String> {
    let cands: Vec<usize> = g.vertices().filter(|&v| v != x && v != y).collect();
    let adjacent = g.has_edge(x, y);
    for mask in 0u32..1 << cands.len() {
        let s: Vec<usize> = (0..cands.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| cands[i])
            .collect();
        let rainbow = if adjacent {
            let mut with_x = s.clone();
            with_x.push(x);
            let mut with_y = s.clone();
            with_y.push(y);
            is_rainbow(c, &with_x) || is_rainbow(c, &with_y)
        } else {
            is_rainbow(c, &s)
        };
        if rainbow && is_vertex_cut(g, x, y, &s).map_err(err_str)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn check_cut_oracle(cat: &Catalog, ctx: &Ctx) -> Outcome {
    let expired = AtomicBool::new(false);
    let results: Vec<Result<(), (String, String)>> = (2..=cat.n_max.min(6))
        .flat_map(|n| cat.per_n[n].iter())
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|s| {
            let g = &s.graph;
            let n = g.n();
            let mut rng =
                ChaCha8Rng::seed_from_u64(ctx.seed ^ s.key.wrapping_mul(0x9e37_79b9_7f4a_7c15));
            for _ in 0..COLORING_SAMPLES {
                if ctx.deadline.expired() {
                    expired.store(true, Ordering::Relaxed);
                    return Ok(());
                }
                let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=n)).collect();
                let c = VertexColoring::new(colors).expect("colors are positive");
                for x in 0..n {
                    for y in x + 1..n {
                        let fast = find_rainbow_cut(g, &c, x, y)
                            .map_err(|e| (s.graph6.clone(), err_str(e)))?;
                        let slow = naive_rainbow_cut_exists(g, &c, x, y)
                            .map_err(|e| (s.graph6.clone(), e))?;
                        match fast {
                            Some(cert) => {
                                if !slow {
                                    return Err((
                                        s.graph6.clone(),
                                        format!(
                                            "search found a cut for ({x}, {y}) under {} but \
                                             exhaustion finds none",
                                            c.to_text()
                                        ),
                                    ));
                                }
                                if !cert.check(g, &c) {
                                    return Err((
                                        s.graph6.clone(),
                                        format!(
                                            "certificate for ({x}, {y}) under {} fails its own \
                                             check",
                                            c.to_text()
                                        ),
                                    ));
                                }
                            }
                            None => {
                                if slow {
                                    return Err((
                                        s.graph6.clone(),
                                        format!(
                                            "exhaustion finds a cut for ({x}, {y}) under {} but \
                                             the search reports none",
                                            c.to_text()
                                        ),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        })
        .collect();
    let mut failures: Vec<(String, String)> =
        results.into_iter().filter_map(Result::err).collect();
    failures.sort();
    if let Some((g6, detail)) = failures.into_iter().next() {
        return Outcome::Fail { counterexample: g6, detail };
    }
    if expired.load(Ordering::Relaxed) {
        return Outcome::Skipped("time budget exhausted mid-sampling".into());
    }
    Outcome::Pass(format!(
        "rainbow-cut search agrees with all-subsets exhaustion, {COLORING_SAMPLES} sampled \
         colorings per graph (n ≤ 6)"
    ))
}

// ---------------------------------------------------------------------------
// Registry and driver.

type CheckFn = fn(&Catalog, &Ctx) -> Outcome;

const CHECK_REGISTRY: &[(&str, CheckFn)] = &[
    ("bounds", check_bounds),
    ("tree-characterization", check_tree_characterization),
    ("cactus-characterization", check_cactus_characterization),
    ("full-value-characterization", check_full_value_characterization),
    ("near-full-implication", check_near_full_implication),
    ("girth-bound", check_girth_bound),
    ("triangle-free-bound", check_triangle_free_bound),
    ("bipartite-tightness", check_bipartite_tightness),
    ("block-law", check_block_law),
    ("monotonicity", check_monotonicity),
    ("sparse-budget", check_sparse_budget),
    ("removable-cycle", check_removable_cycle),
    ("compose-blocks", check_compose_blocks),
    ("min-size", check_min_size),
    ("max-size-exact", check_max_size_exact),
    ("max-size-interval", check_max_size_interval),
    ("family-formulas", check_family_formulas),
    ("wheel-parity", check_wheel_parity),
    ("family-colorings", check_family_colorings),
    ("cut-oracle", check_cut_oracle),
];

pub fn check_names() -> Vec<&'static str> {
    CHECK_REGISTRY.iter().map(|(name, _)| *name).collect()
}

pub fn audit(opts: &AuditOptions) -> Result<AuditReport, AuditError> {
    if opts.n_max == 0 || opts.n_max > MAX_ENUMERATION_ORDER {
        return Err(AuditError::OrderOutOfRange { n: opts.n_max });
    }
    if let Some(selection) = &opts.selection {
        for name in selection {
            if !CHECK_REGISTRY.iter().any(|(known, _)| known == name) {
                return Err(AuditError::UnknownCheck {
                    name: name.clone(),
                    known: check_names().join(", "),
                });
            }
        }
    }
    let t0 = Instant::now();
    let catalog = Catalog::build(opts.n_max, opts.cap)?;
    let mut checks = Vec::new();
    for (name, run) in CHECK_REGISTRY {
        if let Some(selection) = &opts.selection {
            if !selection.contains(*name) {
                continue;
            }
        }
        let ctx = Ctx {
            cap: opts.cap,
            seed: opts.seed,
            deadline: Deadline::new(opts.budget),
        };
        let start = Instant::now();
        let outcome = if ctx.deadline.expired() {
            Outcome::Skipped("time budget exhausted before the check started".into())
        } else {
            run(&catalog, &ctx)
        };
        let (status, detail, counterexample) = match outcome {
            Outcome::Pass(detail) => (CheckStatus::Pass, detail, None),
            Outcome::Fail { counterexample, detail } => {
                (CheckStatus::Fail, detail, Some(counterexample))
            }
            Outcome::Skipped(detail) => (CheckStatus::Skipped, detail, None),
        };
        checks.push(CheckResult {
            name,
            status,
            detail,
            counterexample,
            elapsed_ms: start.elapsed().as_millis(),
        });
    }
    Ok(AuditReport {
        n_max: opts.n_max,
        seed: opts.seed,
        classes: catalog.classes(),
        cells: catalog.cells.values().cloned().collect(),
        checks,
        elapsed_ms: t0.elapsed().as_millis(),
    })
}
