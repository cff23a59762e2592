//! Constructive coloring for sparse graphs.
//!
//! A connected graph with m = n + k − 2 edges admits an rvd-coloring with at
//! most k colors. [`sparse_coloring`] builds one by structural recursion:
//! trees get a single color; pendant trees are stripped and colored 1;
//! degree-2 vertices are handled by an edge deletion or a chain contraction;
//! and at minimum degree 3 a chordless cycle with connected complement loses
//! its edges and its vertices take fresh colors. The final coloring is
//! re-verified before it is returned.

use thiserror::Error;

use crate::blocks::block_decomposition;
use crate::coloring::VertexColoring;
use crate::cycles::{for_each_cycle_of_length, is_chordless};
use crate::graph::{Graph, GraphError};
use crate::rainbow::{verify_coloring, Verification};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SparseError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("minimum degree is {found}, but a removable cycle needs minimum degree 3")]
    MinDegreeTooSmall { found: usize },
    #[error(
        "no chordless cycle with connected complement found despite minimum degree 3; \
         this contradicts a proved guarantee"
    )]
    NoRemovableCycle,
    #[error("constructed coloring leaves pair ({x}, {y}) without a rainbow cut")]
    NotVerified { x: usize, y: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A chordless cycle whose vertex deletion leaves the graph connected; such a
/// cycle always exists at minimum degree ≥ 3, so failure to find one is
/// reported as an invariant violation rather than papered over. Among
/// qualifying cycles, the lexicographically least vertex sequence of minimum
/// length is returned.
pub fn find_removable_cycle(g: &Graph) -> Result<Vec<usize>, SparseError> {
    if !g.connected() {
        return Err(SparseError::Disconnected);
    }
    let delta = g.min_degree();
    if delta < 3 {
        return Err(SparseError::MinDegreeTooSmall { found: delta });
    }
    let n = g.n();
    for len in 3..=n {
        let mut found = None;
        let _ = for_each_cycle_of_length(g, len, &mut |cycle| {
            if is_chordless(g, cycle) && complement_connected(g, cycle) {
                found = Some(cycle.to_vec());
                return std::ops::ControlFlow::Break(());
            }
            std::ops::ControlFlow::Continue(())
        });
        if let Some(cycle) = found {
            return Ok(cycle);
        }
    }
    Err(SparseError::NoRemovableCycle)
}

/// Is G − V(cycle) nonempty and connected?
fn complement_connected(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.n();
    let mut blocked = vec![false; n];
    for &v in cycle {
        blocked[v] = true;
    }
    let Some(start) = (0..n).find(|&v| !blocked[v]) else {
        return false;
    };
    let reach = g.reachable_avoiding(start, &blocked, None);
    (0..n).all(|v| blocked[v] || reach[v])
}

/// Build a verified rvd-coloring of a connected graph using at most
/// m − n + 2 colors.
pub fn sparse_coloring(g: &Graph) -> Result<VertexColoring, SparseError> {
    if !g.connected() {
        return Err(SparseError::Disconnected);
    }
    let colors = build(g)?;
    let coloring = VertexColoring::new(colors)
        .map_err(|e| SparseError::Invariant(format!("constructed coloring malformed: {e}")))?;
    if g.n() >= 2 {
        match verify_coloring(g, &coloring)? {
            Verification::Valid(_) => {}
            Verification::Invalid { x, y } => return Err(SparseError::NotVerified { x, y }),
        }
    }
    Ok(coloring)
}

/// Recursive construction; every color stays within [1, m − n + 2].
fn build(g: &Graph) -> Result<Vec<usize>, SparseError> {
    let n = g.n();
    if g.m() == n - 1 {
        // Tree: one color suffices — every pair is separated by a path
        // interior vertex (or the deleted edge alone, for adjacent pairs).
        return Ok(vec![1; n]);
    }
    match g.min_degree() {
        0 => Err(SparseError::Disconnected),
        1 => strip_pendants(g),
        2 => {
            let decomp = block_decomposition(g)?;
            let movable = g
                .vertices()
                .find(|&v| g.degree(v) == 2 && !decomp.is_cut_vertex(v));
            match movable {
                Some(u) => delete_at_degree_two(g, u),
                None => contract_cut_chains(g),
            }
        }
        _ => remove_cycle_edges(g),
    }
}

/// Minimum degree ≥ 3: recurse on G − E(C) for a removable chordless cycle C
/// and give C's vertices fresh colors, one each.
fn remove_cycle_edges(g: &Graph) -> Result<Vec<usize>, SparseError> {
    let cycle = find_removable_cycle(g)?;
    let mut cycle_edges: Vec<(usize, usize)> = cycle
        .windows(2)
        .map(|w| (w[0], w[1]))
        .collect();
    cycle_edges.push((cycle[cycle.len() - 1], cycle[0]));
    let rest = g.delete_edges(&cycle_edges)?;
    let mut colors = build(&rest)?;
    let base = colors.iter().copied().max().unwrap_or(0);
    for (i, &v) in cycle.iter().enumerate() {
        colors[v] = base + 1 + i;
    }
    Ok(colors)
}

/// A non-cut degree-2 vertex u with neighbors w, w′: recurse on G − uw, then
/// give u a fresh color; if the recursion colored w and w′ alike, w shares
/// u's fresh color.
fn delete_at_degree_two(g: &Graph, u: usize) -> Result<Vec<usize>, SparseError> {
    let mut nb = g.neighbors(u);
    let w = nb.next().expect("degree 2");
    let w2 = nb.next().expect("degree 2");
    let rest = g.delete_edge(u, w)?;
    if !rest.connected() {
        return Err(SparseError::Invariant(format!(
            "deleting edge ({u}, {w}) at a non-cut vertex disconnected the graph"
        )));
    }
    let mut colors = build(&rest)?;
    let fresh = colors.iter().copied().max().unwrap_or(0) + 1;
    if colors[w] == colors[w2] {
        colors[w] = fresh;
    }
    colors[u] = fresh;
    Ok(colors)
}

/// Every degree-2 vertex is a cut vertex: replace each maximal chain of
/// degree-2 vertices by a single edge between its branch endpoints, recurse
/// on the contracted graph (minimum degree ≥ 3), and color the chain
/// vertices 1.
fn contract_cut_chains(g: &Graph) -> Result<Vec<usize>, SparseError> {
    let n = g.n();
    let branch: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    if branch.is_empty() {
        return Err(SparseError::Invariant(
            "all vertices have degree 2 yet every one is a cut vertex".into(),
        ));
    }
    let mut old_to_new = vec![None; n];
    for (i, &v) in branch.iter().enumerate() {
        old_to_new[v] = Some(i);
    }
    let mut contracted = Graph::empty(branch.len())?;
    for (u, v) in g.edges() {
        if let (Some(nu), Some(nv)) = (old_to_new[u], old_to_new[v]) {
            contracted.add_edge(nu, nv)?;
        }
    }
    let mut seen = vec![false; n];
    for v in g.vertices().filter(|&v| g.degree(v) == 2) {
        if seen[v] {
            continue;
        }
        // Walk the chain through v in both directions to its branch ends.
        let mut ends = Vec::with_capacity(2);
        for start in g.neighbors(v) {
            let (mut prev, mut cur) = (v, start);
            seen[v] = true;
            while g.degree(cur) == 2 {
                seen[cur] = true;
                let next = g
                    .neighbors(cur)
                    .find(|&x| x != prev)
                    .expect("degree-2 vertex has a second neighbor");
                prev = cur;
                cur = next;
            }
            ends.push(cur);
        }
        let (x, y) = (ends[0], ends[1]);
        if x == y {
            return Err(SparseError::Invariant(format!(
                "degree-2 chain through {v} loops back to {x}, so its vertices are not cut vertices"
            )));
        }
        let (nx, ny) = (old_to_new[x].unwrap(), old_to_new[y].unwrap());
        if contracted.has_edge(nx, ny) {
            return Err(SparseError::Invariant(format!(
                "contracting the chain through {v} would double the edge ({x}, {y})"
            )));
        }
        contracted.add_edge(nx, ny)?;
    }
    let inner = build(&contracted)?;
    let mut colors = vec![1; n];
    for (i, &v) in branch.iter().enumerate() {
        colors[v] = inner[i];
    }
    Ok(colors)
}

/// Minimum degree 1: peel pendant trees, recurse on the remaining 2-core,
/// and color every stripped vertex 1.
fn strip_pendants(g: &Graph) -> Result<Vec<usize>, SparseError> {
    let n = g.n();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = g.vertices().filter(|&v| degree[v] == 1).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    queue.push(u);
                }
            }
        }
    }
    let core: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
    if core.is_empty() {
        return Err(SparseError::Invariant(
            "2-core vanished although the graph is not a tree".into(),
        ));
    }
    let sub = g.induced(&core)?;
    let inner = build(&sub.graph)?;
    let mut colors = vec![1; n];
    for (new, &old) in sub.new_to_old.iter().enumerate() {
        colors[old] = inner[new];
    }
    Ok(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    fn assert_within_budget(g: &Graph, c: &VertexColoring) {
        let k = g.m() + 2 - g.n();
        assert!(
            c.max_color() <= k,
            "coloring {:?} exceeds budget {k}",
            c.colors()
        );
    }

    #[test]
    fn tree_gets_one_color() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let c = sparse_coloring(&g).unwrap();
        assert_eq!(c.colors(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn unicyclic_uses_two_colors() {
        // C_5 plus a pendant: strip the pendant, then open the cycle.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        let c = sparse_coloring(&g).unwrap();
        assert_eq!(c.colors(), &[2, 2, 1, 1, 1, 1]);
        assert_within_budget(&g, &c);
    }

    #[test]
    fn complete_graph_four() {
        let c = sparse_coloring(&complete(4)).unwrap();
        assert_eq!(c.colors(), &[2, 3, 4, 1]);
    }

    #[test]
    fn prism_case_one_then_strip() {
        let g = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let c = sparse_coloring(&g).unwrap();
        assert_eq!(c.colors(), &[3, 4, 5, 2, 2, 1]);
        assert_within_budget(&g, &c);
    }

    #[test]
    fn theta_graph_uses_at_most_three() {
        // Vertices 0 and 1 joined by three internally disjoint paths.
        let g = Graph::from_edges(5, [(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]).unwrap();
        let c = sparse_coloring(&g).unwrap();
        assert_within_budget(&g, &c);
    }

    #[test]
    fn chain_between_cliques_contracts() {
        let mut edges = vec![(3, 8), (8, 4)];
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        for u in 4..8 {
            for v in u + 1..8 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(9, edges).unwrap();
        let c = sparse_coloring(&g).unwrap();
        assert_eq!(c.color(8), 1);
        assert_within_budget(&g, &c);
    }

    #[test]
    fn removable_cycle_in_k4() {
        assert_eq!(find_removable_cycle(&complete(4)).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn removable_cycle_in_k33() {
        let g = Graph::from_edges(
            6,
            [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(find_removable_cycle(&g).unwrap(), vec![0, 3, 1, 4]);
    }

    #[test]
    fn removable_cycle_in_prism_is_a_face() {
        let g = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(find_removable_cycle(&g).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn removable_cycle_demands_min_degree_three() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            find_removable_cycle(&p3).unwrap_err(),
            SparseError::MinDegreeTooSmall { found: 1 }
        );
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(
            find_removable_cycle(&c5).unwrap_err(),
            SparseError::MinDegreeTooSmall { found: 2 }
        );
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(sparse_coloring(&g).unwrap_err(), SparseError::Disconnected);
    }

    #[test]
    fn single_vertex_and_single_edge() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(sparse_coloring(&k1).unwrap().colors(), &[1]);
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(sparse_coloring(&k2).unwrap().colors(), &[1, 1]);
    }
}
