//! Exhaustive enumeration of small connected graphs.
//!
//! Labeled graphs on n ≤ 7 vertices are generated as edge-set bitmasks in
//! ascending order. Isomorph rejection keeps exactly the labeled graphs whose
//! bitmask is lexicographically least in their isomorphism class, found by a
//! branch-and-bound search over relabelings; the surviving representatives are
//! deterministic and their counts match the known connected-graph sequence
//! 1, 1, 2, 6, 21, 112, 853.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::Graph;

/// Largest order with built-in exhaustive enumeration (2^21 labeled graphs).
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Largest order for which canonical keys fit in 64 bits with headroom.
pub const MAX_CANONICAL_ORDER: usize = 11;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error(
        "built-in enumeration covers 1 ≤ n ≤ {MAX_ENUMERATION_ORDER}, got {n}; larger graphs \
         must be supplied externally (e.g. as graph6 lines)"
    )]
    OrderOutOfRange { n: usize },
    #[error("canonical keys are defined for 1 ≤ n ≤ {MAX_CANONICAL_ORDER}, got {n}")]
    KeyOutOfRange { n: usize },
}

/// Pair list (0,1), (0,2), (1,2), (0,3), … — row-major by the larger
/// endpoint, matching the canonical-key bit order.
fn pair_bit(j: usize, i: usize) -> usize {
    debug_assert!(j < i);
    i * (i - 1) / 2 + j
}

fn adjacency_rows(g: &Graph) -> Vec<u32> {
    let mut rows = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

fn rows_connected(n: usize, rows: &[u32]) -> bool {
    let mut seen: u32 = 1;
    let mut frontier: u32 = 1;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

/// Key of the identity labeling: bit (j, i) of the adjacency, high bits
/// first.
fn identity_key(n: usize, rows: &[u32]) -> u64 {
    let mut key = 0u64;
    for i in 1..n {
        for j in 0..i {
            key = (key << 1) | u64::from(rows[j] >> i & 1);
        }
    }
    key
}

struct KeySearch<'a> {
    n: usize,
    rows: &'a [u32],
    total_bits: u32,
    perm: Vec<usize>,
    best: u64,
}

impl KeySearch<'_> {
    /// Extend the partial relabeling `perm` (new label -> old vertex) with a
    /// choice for position `depth`; `partial` holds the key bits fixed so
    /// far. Lexicographic bit-string order means a prefix already above the
    /// best key can never recover, so such branches are cut.
    fn descend(&mut self, depth: usize, used: u32, partial: u64, bits: u32) {
        if depth == self.n {
            if partial < self.best {
                self.best = partial;
            }
            return;
        }
        for old in 0..self.n {
            if used >> old & 1 == 1 {
                continue;
            }
            let mut next = partial;
            for j in 0..depth {
                next = (next << 1) | u64::from(self.rows[self.perm[j]] >> old & 1);
            }
            let next_bits = bits + depth as u32;
            if next > self.best >> (self.total_bits - next_bits) {
                continue;
            }
            self.perm[depth] = old;
            self.descend(depth + 1, used | 1 << old, next, next_bits);
        }
    }
}

fn canonical_key_rows(n: usize, rows: &[u32]) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut search = KeySearch {
        n,
        rows,
        total_bits: (n * (n - 1) / 2) as u32,
        perm: vec![0; n],
        best: identity_key(n, rows),
    };
    search.descend(0, 0, 0, 0);
    search.best
}

/// A label-invariant fingerprint: equal keys ⟺ isomorphic graphs
/// (for orders up to [`MAX_CANONICAL_ORDER`]). The key is the smallest
/// adjacency bit string over all relabelings.
pub fn canonical_key(g: &Graph) -> Result<u64, EnumerateError> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(EnumerateError::KeyOutOfRange { n });
    }
    Ok(canonical_key_rows(n, &adjacency_rows(g)))
}

/// Visit every connected labeled graph on `n` vertices exactly once, in
/// ascending edge-bitmask order.
pub fn for_each_connected_labeled<F>(n: usize, f: &mut F) -> Result<(), EnumerateError>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::OrderOutOfRange { n });
    }
    let bits = n * (n - 1) / 2;
    let mut rows = vec![0u32; n];
    for mask in 0u32..1 << bits {
        rows.iter_mut().for_each(|r| *r = 0);
        for i in 1..n {
            for j in 0..i {
                if mask >> pair_bit(j, i) & 1 == 1 {
                    rows[j] |= 1 << i;
                    rows[i] |= 1 << j;
                }
            }
        }
        if !rows_connected(n, &rows) {
            continue;
        }
        let g = graph_from_rows(n, &rows);
        if f(&g).is_break() {
            return Ok(());
        }
    }
    Ok(())
}

fn graph_from_rows(n: usize, rows: &[u32]) -> Graph {
    let edges = (0..n).flat_map(|u| {
        (u + 1..n).filter_map(move |v| (rows[u] >> v & 1 == 1).then_some((u, v)))
    });
    Graph::from_edges(n, edges).expect("rows describe a simple graph")
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices: the labeled graph with the least canonical adjacency bit string
/// in its class. Deterministic order (ascending bitmask).
pub fn connected_representatives(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::OrderOutOfRange { n });
    }
    let bits = n * (n - 1) / 2;
    let mut reps = Vec::new();
    let mut rows = vec![0u32; n];
    for mask in 0u32..1 << bits {
        rows.iter_mut().for_each(|r| *r = 0);
        for i in 1..n {
            for j in 0..i {
                if mask >> pair_bit(j, i) & 1 == 1 {
                    rows[j] |= 1 << i;
                    rows[i] |= 1 << j;
                }
            }
        }
        if !rows_connected(n, &rows) {
            continue;
        }
        // Keep the graph only when its own labeling is already canonical.
        if canonical_key_rows(n, &rows) == identity_key(n, &rows) {
            reps.push(graph_from_rows(n, &rows));
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_enumeration_counts() {
        // Connected labeled graphs: 1, 1, 4, 38, 728 for n = 1..5.
        let want = [1usize, 1, 4, 38, 728];
        for (i, &expect) in want.iter().enumerate() {
            let mut count = 0;
            for_each_connected_labeled(i + 1, &mut |_| {
                count += 1;
                ControlFlow::Continue(())
            })
            .unwrap();
            assert_eq!(count, expect, "n = {}", i + 1);
        }
    }

    #[test]
    fn representative_counts_match_known_sequence() {
        let want = [1usize, 1, 2, 6, 21, 112];
        for (i, &expect) in want.iter().enumerate() {
            let reps = connected_representatives(i + 1).unwrap();
            assert_eq!(reps.len(), expect, "n = {}", i + 1);
        }
    }

    #[test]
    fn keys_are_label_invariant() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let p4_relabeled = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_key(&p4).unwrap(), canonical_key(&p4_relabeled).unwrap());

        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_key(&p4).unwrap(), canonical_key(&star).unwrap());
    }

    #[test]
    fn keys_separate_all_representatives() {
        for n in 1..=6 {
            let reps = connected_representatives(n).unwrap();
            let mut keys: Vec<u64> = reps.iter().map(|g| canonical_key(g).unwrap()).collect();
            keys.sort_unstable();
            keys.dedup();
            assert_eq!(keys.len(), reps.len(), "n = {n}");
        }
    }

    #[test]
    fn first_connected_graph_on_three_vertices() {
        let mut first = None;
        for_each_connected_labeled(3, &mut |g| {
            first = Some(g.clone());
            ControlFlow::Break(())
        })
        .unwrap();
        let g = first.unwrap();
        // Lowest connected mask: edges (0,1) and (0,2).
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn out_of_range_orders_are_refused() {
        assert_eq!(
            connected_representatives(8).unwrap_err(),
            EnumerateError::OrderOutOfRange { n: 8 }
        );
        assert_eq!(
            for_each_connected_labeled(0, &mut |_| ControlFlow::Continue(())).unwrap_err(),
            EnumerateError::OrderOutOfRange { n: 0 }
        );
        let big = Graph::empty(12).unwrap();
        assert_eq!(
            canonical_key(&big).unwrap_err(),
            EnumerateError::KeyOutOfRange { n: 12 }
        );
    }

    #[test]
    fn single_vertex_enumerates_once() {
        let reps = connected_representatives(1).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].n(), 1);
        assert_eq!(canonical_key(&reps[0]).unwrap(), 0);
    }
}
