//! Local and global vertex connectivity by Menger's theorem: unit vertex
//! capacities, split each vertex into an in/out pair, run augmenting-path
//! max-flow.

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct LocalConnectivity {
    pub x: usize,
    pub y: usize,
    pub value: usize,
}

struct FlowNet {
    // arcs[a] = (to, cap); arcs are stored in pairs, a ^ 1 is the reverse.
    arcs: Vec<(usize, i32)>,
    head: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet { arcs: Vec::new(), head: vec![Vec::new(); nodes] }
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        self.head[from].push(self.arcs.len());
        self.arcs.push((to, cap));
        self.head[to].push(self.arcs.len());
        self.arcs.push((from, 0));
    }

    /// Edmonds–Karp, stopping once the flow reaches `limit`.
    fn max_flow(&mut self, s: usize, t: usize, limit: i32) -> i32 {
        let mut total = 0;
        while total < limit {
            let mut prev: Vec<Option<usize>> = vec![None; self.head.len()];
            prev[s] = Some(usize::MAX);
            let mut queue = std::collections::VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.head[u] {
                    let (v, cap) = self.arcs[a];
                    if cap > 0 && prev[v].is_none() {
                        prev[v] = Some(a);
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if prev[t].is_none() {
                break;
            }
            // unit capacities along vertex arcs: each path carries 1
            let mut v = t;
            while v != s {
                let a = prev[v].unwrap();
                self.arcs[a].1 -= 1;
                self.arcs[a ^ 1].1 += 1;
                v = self.arcs[a ^ 1].0;
            }
            total += 1;
        }
        total
    }
}

/// Number of internally disjoint x–y paths in `g` minus the optional
/// excluded edge, which equals the minimum x–y vertex cut when x,y are
/// nonadjacent there (Menger).
fn disjoint_paths(g: &Graph, x: usize, y: usize, skip: Option<(usize, usize)>) -> usize {
    let n = g.n();
    let big = n as i32 + 1;
    // node 2v = v_in, 2v+1 = v_out
    let mut net = FlowNet::new(2 * n);
    for v in g.vertices() {
        let cap = if v == x || v == y { big } else { 1 };
        net.arc(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        if skip == Some((u.min(v), u.max(v))) {
            continue;
        }
        net.arc(2 * u + 1, 2 * v, big);
        net.arc(2 * v + 1, 2 * u, big);
    }
    net.max_flow(2 * x + 1, 2 * y, big) as usize
}

/// κ_G(x, y): for nonadjacent pairs the minimum size of an x–y vertex cut;
/// for adjacent pairs 1 + the same quantity in G − xy.
pub fn local_connectivity(g: &Graph, x: usize, y: usize) -> Result<LocalConnectivity, GraphError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(GraphError::IdenticalEndpoints);
    }
    let value = if g.has_edge(x, y) {
        1 + disjoint_paths(g, x, y, Some((x.min(y), x.max(y))))
    } else {
        disjoint_paths(g, x, y, None)
    };
    Ok(LocalConnectivity { x, y, value })
}

/// κ(G) for connected g of order ≥ 2: the minimum number of vertices whose
/// removal disconnects the graph or reduces it to a single vertex.
pub fn connectivity(g: &Graph) -> Result<usize, GraphError> {
    if g.n() < 2 {
        return Err(GraphError::OrderTooSmall { n: g.n(), min: 2 });
    }
    if !g.connected() {
        return Err(GraphError::Disconnected);
    }
    if g.is_complete() {
        return Ok(g.n() - 1);
    }
    let mut best = usize::MAX;
    for x in g.vertices() {
        for y in x + 1..g.n() {
            if !g.has_edge(x, y) {
                best = best.min(local_connectivity(g, x, y)?.value);
            }
        }
    }
    Ok(best)
}

/// κ⁺(G) = max over all vertex pairs of κ_G(x, y).
pub fn upper_connectivity(g: &Graph) -> Result<usize, GraphError> {
    if g.n() < 2 {
        return Err(GraphError::OrderTooSmall { n: g.n(), min: 2 });
    }
    if !g.connected() {
        return Err(GraphError::Disconnected);
    }
    let mut best = 0;
    for x in g.vertices() {
        for y in x + 1..g.n() {
            best = best.max(local_connectivity(g, x, y)?.value);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_graph, cycle_graph, star_graph};

    #[test]
    fn adjacent_pair_in_k4() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(local_connectivity(&k4, 0, 1).unwrap().value, 3);
    }

    #[test]
    fn cycle_pairs() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(local_connectivity(&c5, 0, 2).unwrap().value, 2);
        assert_eq!(local_connectivity(&c5, 0, 1).unwrap().value, 2);
        assert_eq!(connectivity(&c5).unwrap(), 2);
        assert_eq!(upper_connectivity(&c5).unwrap(), 2);
    }

    #[test]
    fn star_leaves() {
        let s = star_graph(6).unwrap();
        assert_eq!(local_connectivity(&s, 1, 2).unwrap().value, 1);
        assert_eq!(local_connectivity(&s, 0, 3).unwrap().value, 1);
        assert_eq!(connectivity(&s).unwrap(), 1);
        assert_eq!(upper_connectivity(&s).unwrap(), 1);
    }

    #[test]
    fn complete_graphs() {
        for n in 2..6 {
            let k = complete_graph(n).unwrap();
            assert_eq!(connectivity(&k).unwrap(), n - 1);
            assert_eq!(upper_connectivity(&k).unwrap(), n - 1);
        }
    }

    #[test]
    fn k2_edge_only_connection() {
        let k2 = complete_graph(2).unwrap();
        assert_eq!(local_connectivity(&k2, 0, 1).unwrap().value, 1);
        assert_eq!(upper_connectivity(&k2).unwrap(), 1);
        assert_eq!(connectivity(&k2).unwrap(), 1);
    }

    #[test]
    fn argument_errors() {
        let k2 = complete_graph(2).unwrap();
        assert_eq!(local_connectivity(&k2, 1, 1), Err(GraphError::IdenticalEndpoints));
        assert!(matches!(
            local_connectivity(&k2, 0, 5),
            Err(GraphError::VertexOutOfRange { v: 5, n: 2 })
        ));
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(connectivity(&split), Err(GraphError::Disconnected));
    }

    #[test]
    fn two_blocks_mixed_pairs() {
        // bowtie: triangles 0,1,2 and 2,3,4
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(local_connectivity(&g, 0, 1).unwrap().value, 2);
        assert_eq!(local_connectivity(&g, 0, 3).unwrap().value, 1);
        assert_eq!(connectivity(&g).unwrap(), 1);
        assert_eq!(upper_connectivity(&g).unwrap(), 2);
    }
}
