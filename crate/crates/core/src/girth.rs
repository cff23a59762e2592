//! Girth: length of a shortest cycle, 0 for acyclic graphs.

use crate::graph::Graph;

/// BFS from every root; a non-tree edge (u, v) inside one BFS tree closes a
/// cycle of length dist(u) + dist(v) + 1 through the root, and minimizing
/// over all roots and edges is exact.
pub fn girth(g: &Graph) -> usize {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        for (u, v) in g.edges() {
            if dist[u] == usize::MAX || dist[v] == usize::MAX {
                continue;
            }
            if parent[u] == v || parent[v] == u {
                continue;
            }
            best = best.min(dist[u] + dist[v] + 1);
        }
    }
    if best == usize::MAX {
        0
    } else {
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_graph, cycle_graph, petersen_graph};

    #[test]
    fn cycles_and_cliques() {
        for n in 3..9 {
            assert_eq!(girth(&cycle_graph(n).unwrap()), n);
        }
        for n in 3..7 {
            assert_eq!(girth(&complete_graph(n).unwrap()), 3);
        }
    }

    #[test]
    fn acyclic_is_zero() {
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(girth(&path), 0);
        assert_eq!(girth(&Graph::empty(3).unwrap()), 0);
    }

    #[test]
    fn petersen_is_five() {
        assert_eq!(girth(&petersen_graph()), 5);
    }

    #[test]
    fn disconnected_takes_min_over_components() {
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3), (6, 7)])
            .unwrap();
        assert_eq!(girth(&g), 3);
    }

    #[test]
    fn theta_like_graph() {
        let g = Graph::from_edges(6, [(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 4)]).unwrap();
        assert_eq!(girth(&g), 4); // 0-3-4-5-0
    }
}
