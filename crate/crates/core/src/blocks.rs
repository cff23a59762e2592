//! Blocks (maximal 2-connected subgraphs and bridges) and cut vertices,
//! via the classic lowpoint depth-first search.

use crate::graph::{Graph, GraphError, VertexDeletion};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, each sorted ascending; the list is sorted
    /// lexicographically.
    pub blocks: Vec<Vec<usize>>,
    /// Cut vertices, ascending.
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Induced subgraph of block `idx` (blocks are induced: a maximal
    /// 2-connected subgraph contains every edge between its vertices).
    pub fn block_subgraph(&self, g: &Graph, idx: usize) -> Result<VertexDeletion, GraphError> {
        g.induced(&self.blocks[idx])
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    cut: Vec<bool>,
}

impl Dfs<'_> {
    fn run(&mut self, root: usize) {
        // Explicit stack; each frame tracks the neighbor iterator position.
        let mut stack: Vec<(usize, Option<usize>, Vec<usize>, usize, usize)> = Vec::new();
        // (vertex, parent, neighbor list, next neighbor index, child count)
        let nbrs: Vec<usize> = self.g.neighbors(root).collect();
        self.disc[root] = self.time;
        self.low[root] = self.time;
        self.time += 1;
        stack.push((root, None, nbrs, 0, 0));
        while let Some(frame) = stack.last_mut() {
            let (u, parent, ref nbrs, ref mut i, ref mut children) = *frame;
            if let Some(&v) = nbrs.get(*i) {
                *i += 1;
                if Some(v) == parent {
                    continue;
                }
                if self.disc[v] == usize::MAX {
                    *children += 1;
                    self.edge_stack.push((u, v));
                    self.disc[v] = self.time;
                    self.low[v] = self.time;
                    self.time += 1;
                    let vn: Vec<usize> = self.g.neighbors(v).collect();
                    stack.push((v, Some(u), vn, 0, 0));
                } else if self.disc[v] < self.disc[u] {
                    self.edge_stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            } else {
                let children = *children;
                stack.pop();
                if let Some(&mut (p, pparent, _, _, _)) = stack.last_mut() {
                    self.low[p] = self.low[p].min(self.low[u]);
                    if self.low[u] >= self.disc[p] {
                        // (p, u) closes a block
                        if pparent.is_some() {
                            self.cut[p] = true;
                        }
                        self.pop_block(p, u);
                    }
                } else if children >= 2 {
                    self.cut[u] = true;
                }
            }
        }
    }

    fn pop_block(&mut self, p: usize, u: usize) {
        let mut verts = std::collections::BTreeSet::new();
        while let Some(&(a, b)) = self.edge_stack.last() {
            self.edge_stack.pop();
            verts.insert(a);
            verts.insert(b);
            if (a, b) == (p, u) {
                break;
            }
        }
        self.blocks.push(verts.into_iter().collect());
    }
}

/// Decompose a connected graph of order ≥ 2 into its blocks.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, GraphError> {
    if g.n() < 2 {
        return Err(GraphError::OrderTooSmall { n: g.n(), min: 2 });
    }
    if !g.connected() {
        return Err(GraphError::Disconnected);
    }
    let mut dfs = Dfs {
        g,
        disc: vec![usize::MAX; g.n()],
        low: vec![usize::MAX; g.n()],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cut: vec![false; g.n()],
    };
    dfs.run(0);
    // Root's final child block: popped when the root frame's child returns,
    // which the loop above does handle (root is `p` there). Any leftover
    // edges would signal a bug.
    debug_assert!(dfs.edge_stack.is_empty());
    let mut blocks = dfs.blocks;
    blocks.sort();
    let cut_vertices = (0..g.n()).filter(|&v| dfs.cut[v]).collect();
    Ok(BlockDecomposition { blocks, cut_vertices })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1]]);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(d.cut_vertices, vec![2]);
        assert!(d.is_cut_vertex(2) && !d.is_cut_vertex(0));
    }

    #[test]
    fn path_is_all_bridges() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(d.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn two_connected_is_one_block() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d = block_decomposition(&c5).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3, 4]]);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn cycle_with_pendant() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 4)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![1, 3], vec![3, 4]]);
        assert_eq!(d.cut_vertices, vec![1, 3]);
    }

    #[test]
    fn rejects_bad_inputs() {
        let lone = Graph::empty(1).unwrap();
        assert!(matches!(block_decomposition(&lone), Err(GraphError::OrderTooSmall { .. })));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(block_decomposition(&split), Err(GraphError::Disconnected));
    }

    #[test]
    fn block_subgraph_is_induced() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        let tri = d.block_subgraph(&g, 0).unwrap();
        assert_eq!(tri.graph.n(), 3);
        assert_eq!(tri.graph.m(), 3);
        assert_eq!(tri.new_to_old, vec![0, 1, 2]);
    }
}
