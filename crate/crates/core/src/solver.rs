//! Exact rvd computation.
//!
//! The search iterates candidate palette sizes `k` from a proved lower bound
//! to a proved upper bound and, for each `k`, enumerates vertex colorings as
//! restricted-growth strings (set partitions into exactly `k` classes, each
//! palette visited once up to color renaming — the verifier is
//! renaming-invariant, so this loses nothing and saves a factor of `k!`).
//! Partitions that merge two vertices with two or more common neighbors are
//! pruned: such pairs must receive distinct colors in any accepted coloring.
//! The first verified candidate, in lexicographic restricted-growth order, is
//! the witness.
//!
//! Graphs with cut vertices are solved block by block: the rvd value of a
//! graph is the maximum over its blocks, and the per-block witnesses are glued
//! back together by [`compose_block_colorings`].

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::blocks::block_decomposition;
use crate::coloring::VertexColoring;
use crate::connectivity::upper_connectivity;
use crate::girth::girth;
use crate::graph::{Graph, GraphError};
use crate::rainbow::{verify_coloring, CutCertificate, Verification};

/// Largest search-component order attempted without an explicit override.
/// The candidate space grows super-exponentially; past this order the solver
/// refuses instead of silently hanging.
pub const DEFAULT_CAP: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph is disconnected; rvd is defined for connected graphs only")]
    Disconnected,
    #[error(
        "search component has {n} vertices, above the cap of {cap}; \
         raise the cap to force the search"
    )]
    CapExceeded { n: usize, cap: usize },
    #[error("expected {expected} block colorings, got {got}")]
    BlockCountMismatch { expected: usize, got: usize },
    #[error("coloring for block {index} covers {got} vertices, but the block has {expected}")]
    BlockSizeMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Pairs of vertices forced to distinct colors: if two vertices have at least
/// two common neighbors, no accepted coloring may merge them.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl ConflictGraph {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![BTreeSet::new(); n];
        for x in 0..n {
            for y in x + 1..n {
                if g.common_neighbors(x, y).len() >= 2 {
                    adj[x].insert(y);
                    adj[y].insert(x);
                }
            }
        }
        ConflictGraph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn are_conflicting(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn conflicts(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// A maximal clique found greedily from every seed vertex (largest kept).
    /// Its size is a lower bound on the palette: clique members are pairwise
    /// forced apart. Maximal, not maximum — this is only a bound.
    pub fn greedy_clique(&self) -> Vec<usize> {
        let n = self.n();
        let mut best: Vec<usize> = match n {
            0 => return Vec::new(),
            _ => vec![0],
        };
        for seed in 0..n {
            let mut clique = vec![seed];
            for u in 0..n {
                if u != seed && clique.iter().all(|&w| self.are_conflicting(u, w)) {
                    clique.push(u);
                }
            }
            if clique.len() > best.len() {
                clique.sort_unstable();
                best = clique;
            }
        }
        best.sort_unstable();
        best
    }
}

/// Which bound produced the reported lower bound (or, for a multi-block
/// graph, that the value is the maximum over blocks).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundReason {
    /// Every connected graph needs at least one color.
    Trivial,
    /// κ⁺(G): the maximum local connectivity over vertex pairs.
    UpperConnectivity,
    /// A clique in the conflict graph must be rainbow.
    ConflictClique,
    /// Maximum of the exact values of the blocks.
    BlockMaximum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: usize,
    pub reason: BoundReason,
}

/// Best available lower bound for rvd: max of κ⁺(g), the greedy
/// conflict-clique size, and 1. Requires `g` connected with ≥ 2 vertices.
pub fn lower_bound(g: &Graph) -> Result<LowerBound, SolverError> {
    if !g.connected() {
        return Err(SolverError::Disconnected);
    }
    if g.n() < 2 {
        return Err(GraphError::OrderTooSmall { n: g.n(), min: 2 }.into());
    }
    let kappa_plus = upper_connectivity(g)?;
    let clique = ConflictGraph::of(g).greedy_clique().len();
    let value = kappa_plus.max(clique).max(1);
    let reason = if value == 1 {
        BoundReason::Trivial
    } else if kappa_plus == value {
        BoundReason::UpperConnectivity
    } else {
        BoundReason::ConflictClique
    };
    Ok(LowerBound { value, reason })
}

/// Best available upper bound for rvd on a connected graph: min of n,
/// m − n + 2 (a graph needing k colors has at least n + k − 2 edges), and
/// n − g + 2 when the girth g is at least 4. Trees get 1 (= m − n + 2).
pub fn upper_bound(g: &Graph) -> Result<usize, SolverError> {
    if !g.connected() {
        return Err(SolverError::Disconnected);
    }
    let n = g.n();
    let mut bound = n.min(g.m() + 2 - n);
    let g0 = girth(g);
    if g0 >= 4 {
        bound = bound.min(n - g0 + 2);
    }
    Ok(bound.max(1))
}

/// Exact rvd value with a verified witness coloring.
#[derive(Debug, Clone, Serialize)]
pub struct RvdResult {
    pub value: usize,
    /// Coloring using exactly `value` colors, accepted by the verifier.
    pub witness: VertexColoring,
    /// One rainbow-cut certificate per vertex pair, lexicographic order.
    pub certificates: Vec<CutCertificate>,
    pub lower_bound_reason: BoundReason,
}

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// Largest single search component (block, or whole graph for the flat
    /// search) the solver will attempt.
    pub cap: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { cap: DEFAULT_CAP }
    }
}

/// Depth-first enumeration of restricted-growth strings with exactly `k`
/// classes, pruning conflict-merging prefixes; returns the first (lex-least)
/// candidate accepted by the verifier.
struct PartitionSearch<'a> {
    g: &'a Graph,
    conflict: &'a ConflictGraph,
    k: usize,
    classes: Vec<usize>,
}

impl<'a> PartitionSearch<'a> {
    fn run(g: &'a Graph, conflict: &'a ConflictGraph, k: usize) -> Option<(VertexColoring, Vec<CutCertificate>)> {
        let n = g.n();
        if k > n {
            return None;
        }
        let mut s = PartitionSearch {
            g,
            conflict,
            k,
            classes: vec![0; n],
        };
        s.descend(0, 0)
    }

    fn descend(&mut self, pos: usize, used: usize) -> Option<(VertexColoring, Vec<CutCertificate>)> {
        let n = self.classes.len();
        if pos == n {
            if used != self.k {
                return None;
            }
            let colors: Vec<usize> = self.classes.iter().map(|&c| c + 1).collect();
            let coloring = VertexColoring::new(colors).expect("classes are valid colors");
            if let Ok(Verification::Valid(certs)) = verify_coloring(self.g, &coloring) {
                return Some((coloring, certs));
            }
            return None;
        }
        // Not enough positions left to open the remaining classes.
        if used + (n - pos) < self.k {
            return None;
        }
        let top = used.min(self.k - 1);
        'class: for cls in 0..=top {
            for nb in self.conflict.conflicts(pos) {
                if nb < pos && self.classes[nb] == cls {
                    continue 'class;
                }
            }
            self.classes[pos] = cls;
            let next_used = used.max(cls + 1);
            if let Some(found) = self.descend(pos + 1, next_used) {
                return Some(found);
            }
        }
        None
    }
}

/// Exhaustive search on one component, without block decomposition.
fn solve_flat(g: &Graph, cap: usize) -> Result<RvdResult, SolverError> {
    let n = g.n();
    if n > cap {
        return Err(SolverError::CapExceeded { n, cap });
    }
    let lb = lower_bound(g)?;
    let ub = upper_bound(g)?;
    let conflict = ConflictGraph::of(g);
    for k in lb.value..=ub {
        if let Some((witness, certificates)) = PartitionSearch::run(g, &conflict, k) {
            return Ok(RvdResult {
                value: k,
                witness,
                certificates,
                lower_bound_reason: lb.reason,
            });
        }
    }
    Err(SolverError::Invariant(format!(
        "no coloring with at most {ub} colors accepted, but {ub} is a proved upper bound"
    )))
}

fn single_vertex_result() -> RvdResult {
    RvdResult {
        value: 1,
        witness: VertexColoring::uniform(1),
        certificates: Vec::new(),
        lower_bound_reason: BoundReason::Trivial,
    }
}

/// Exact rvd via block decomposition, default options.
pub fn rvd_exact(g: &Graph) -> Result<RvdResult, SolverError> {
    rvd_exact_with(g, SolverOptions::default())
}

/// Exact rvd via block decomposition. Each block is solved independently
/// (the cap applies per block), the value is the maximum over blocks, and the
/// witness is rebuilt by [`compose_block_colorings`] and re-verified.
pub fn rvd_exact_with(g: &Graph, opts: SolverOptions) -> Result<RvdResult, SolverError> {
    if !g.connected() {
        return Err(SolverError::Disconnected);
    }
    if g.n() == 1 {
        // A single vertex has no pairs to separate.
        return Ok(single_vertex_result());
    }
    let decomp = block_decomposition(g)?;
    if decomp.blocks.len() == 1 {
        return solve_flat(g, opts.cap);
    }
    let mut value = 1;
    let mut per_block = Vec::with_capacity(decomp.blocks.len());
    for idx in 0..decomp.blocks.len() {
        let sub = decomp.block_subgraph(g, idx)?;
        let res = solve_flat(&sub.graph, opts.cap)?;
        value = value.max(res.value);
        per_block.push(res.witness);
    }
    let witness = compose_block_colorings(g, &per_block)?;
    match verify_coloring(g, &witness)? {
        Verification::Valid(certificates) => Ok(RvdResult {
            value,
            witness,
            certificates,
            lower_bound_reason: BoundReason::BlockMaximum,
        }),
        Verification::Invalid { x, y } => Err(SolverError::Invariant(format!(
            "composed block witness leaves pair ({x}, {y}) without a rainbow cut"
        ))),
    }
}

/// Exact rvd by flat search on the whole graph (no block decomposition),
/// default options. Exists to cross-check the block law.
pub fn rvd_exact_flat(g: &Graph) -> Result<RvdResult, SolverError> {
    rvd_exact_flat_with(g, SolverOptions::default())
}

pub fn rvd_exact_flat_with(g: &Graph, opts: SolverOptions) -> Result<RvdResult, SolverError> {
    if !g.connected() {
        return Err(SolverError::Disconnected);
    }
    if g.n() == 1 {
        return Ok(single_vertex_result());
    }
    solve_flat(g, opts.cap)
}

/// Glue per-block colorings into one coloring of `g`.
///
/// Blocks are merged starting from the lexicographically least block; at each
/// step the least unmerged block sharing a vertex with the merged region
/// joins. The shared vertex is unique (two shared vertices would close a
/// cycle through distinct blocks). If its two colors differ, the joining
/// block's palette is transposed by the swap `(merged color, block color)` so
/// the colors agree — inside one block this is a bijection of colors, so the
/// block's coloring stays valid. The palette of the result is the largest
/// block palette.
///
/// The inputs must each be valid rvd-colorings of their blocks; nothing is
/// claimed for weaker inputs.
pub fn compose_block_colorings(
    g: &Graph,
    per_block: &[VertexColoring],
) -> Result<VertexColoring, SolverError> {
    let decomp = block_decomposition(g)?;
    if per_block.len() != decomp.blocks.len() {
        return Err(SolverError::BlockCountMismatch {
            expected: decomp.blocks.len(),
            got: per_block.len(),
        });
    }
    for (index, (block, coloring)) in decomp.blocks.iter().zip(per_block).enumerate() {
        if coloring.len() != block.len() {
            return Err(SolverError::BlockSizeMismatch {
                index,
                got: coloring.len(),
                expected: block.len(),
            });
        }
    }
    let n = g.n();
    let mut merged: Vec<Option<usize>> = vec![None; n];
    let mut done = vec![false; decomp.blocks.len()];
    for (pos, &v) in decomp.blocks[0].iter().enumerate() {
        merged[v] = Some(per_block[0].color(pos));
    }
    done[0] = true;
    for _ in 1..decomp.blocks.len() {
        let next = (0..decomp.blocks.len()).find(|&b| {
            !done[b] && decomp.blocks[b].iter().any(|&v| merged[v].is_some())
        });
        let b = next.ok_or_else(|| {
            SolverError::Invariant("no unmerged block touches the merged region".into())
        })?;
        let shared: Vec<usize> = decomp.blocks[b]
            .iter()
            .copied()
            .filter(|&v| merged[v].is_some())
            .collect();
        if shared.len() != 1 {
            return Err(SolverError::Invariant(format!(
                "block {b} shares {} vertices with the merged region, expected 1",
                shared.len()
            )));
        }
        let v = shared[0];
        let pos_v = decomp.blocks[b]
            .binary_search(&v)
            .expect("shared vertex is in the block");
        let glue = merged[v].expect("shared vertex is colored");
        let own = per_block[b].color(pos_v);
        for (pos, &w) in decomp.blocks[b].iter().enumerate() {
            let col = per_block[b].color(pos);
            let col = if col == glue {
                own
            } else if col == own {
                glue
            } else {
                col
            };
            match merged[w] {
                None => merged[w] = Some(col),
                Some(prev) => {
                    if prev != col {
                        return Err(SolverError::Invariant(format!(
                            "vertex {w} recolored from {prev} to {col} during merge"
                        )));
                    }
                }
            }
        }
        done[b] = true;
    }
    let colors: Vec<usize> = merged
        .into_iter()
        .map(|c| c.ok_or_else(|| SolverError::Invariant("vertex missed by every block".into())))
        .collect::<Result<_, _>>()?;
    VertexColoring::new(colors)
        .map_err(|e| SolverError::Invariant(format!("merged coloring malformed: {e}")))
}
