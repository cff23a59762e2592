//! Brute-force oracles shared by the integration tests. Everything here is
//! recomputed straight from the definitions with plain subset sweeps, so the
//! library's optimized searches have something genuinely independent to agree
//! with.

use rvdkit_core::coloring::VertexColoring;
use rvdkit_core::graph::Graph;

/// True when the colors on `set` (a vertex bitmask) are pairwise distinct.
pub fn rainbow_mask(c: &VertexColoring, set: u32) -> bool {
    let mut seen = std::collections::HashSet::new();
    (0..c.len()).filter(|v| set >> v & 1 == 1).all(|v| seen.insert(c.color(v)))
}

/// True when deleting `cut` (and the edge x–y when `drop_edge` is set)
/// leaves no path from x to y.
pub fn separates(g: &Graph, x: usize, y: usize, cut: u32, drop_edge: bool) -> bool {
    let mut seen = 1u32 << x;
    let mut queue = vec![x];
    while let Some(v) = queue.pop() {
        for w in g.neighbors(v) {
            if drop_edge && ((v == x && w == y) || (v == y && w == x)) {
                continue;
            }
            if cut >> w & 1 == 1 || seen >> w & 1 == 1 {
                continue;
            }
            seen |= 1 << w;
            queue.push(w);
        }
    }
    seen >> y & 1 == 0
}

/// Definition-level test: does the pair x, y admit a rainbow vertex cut
/// under `c`? Every subset of the other vertices is tried. Nonadjacent
/// pairs need a rainbow separator; adjacent pairs need a separator of the
/// graph minus the edge x–y that stays rainbow after adding x or adding y.
pub fn naive_pair_has_cut(g: &Graph, c: &VertexColoring, x: usize, y: usize) -> bool {
    let others: Vec<usize> = g.vertices().filter(|&v| v != x && v != y).collect();
    let adjacent = g.has_edge(x, y);
    for choice in 0u32..1 << others.len() {
        let mut cut = 0u32;
        for (i, &v) in others.iter().enumerate() {
            if choice >> i & 1 == 1 {
                cut |= 1 << v;
            }
        }
        let found = if adjacent {
            separates(g, x, y, cut, true)
                && (rainbow_mask(c, cut | 1 << x) || rainbow_mask(c, cut | 1 << y))
        } else {
            rainbow_mask(c, cut) && separates(g, x, y, cut, false)
        };
        if found {
            return true;
        }
    }
    false
}

/// Definition-level validity of a whole coloring.
pub fn naive_valid(g: &Graph, c: &VertexColoring) -> bool {
    let n = g.n();
    (0..n).all(|y| (0..y).all(|x| naive_pair_has_cut(g, c, x, y)))
}

/// Smallest palette size admitting a valid coloring, found by enumerating
/// every coloring with colors from {1, …, k} for k = 1, 2, … in turn.
/// (Each test target compiles this module separately; only the
/// enumeration suites call the full value search.)
#[allow(dead_code)]
pub fn naive_rvd(g: &Graph) -> usize {
    let n = g.n();
    for k in 1..=n {
        let mut digits = vec![1usize; n];
        loop {
            let c = VertexColoring::new(digits.clone()).expect("colors are positive");
            if naive_valid(g, &c) {
                return k;
            }
            let mut i = 0;
            while i < n {
                digits[i] += 1;
                if digits[i] <= k {
                    break;
                }
                digits[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    unreachable!("an all-distinct coloring is valid on every connected graph");
}
