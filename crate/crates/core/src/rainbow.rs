//! Rainbow vertex-cuts and rvd-coloring verification.
//!
//! A set is rainbow when its vertices all receive distinct colors. A
//! coloring of a connected graph is an rvd-coloring when every vertex pair
//! x, y admits a rainbow x–y vertex-cut:
//!   * x, y nonadjacent: a rainbow S ⊆ V ∖ {x, y} separating x from y;
//!   * x, y adjacent: S ⊆ V ∖ {x, y} separating them in G − xy, such that
//!     S ∪ {x} or S ∪ {y} is rainbow.

use crate::coloring::VertexColoring;
use crate::connectivity::local_connectivity;
use crate::graph::{Graph, GraphError};
use std::ops::ControlFlow;

/// Proof that one pair has a rainbow vertex-cut. For adjacent pairs,
/// `witness` names the endpoint that joins the cut to form a rainbow set;
/// for nonadjacent pairs it is `None` and the cut itself is rainbow.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CutCertificate {
    pub x: usize,
    pub y: usize,
    pub cut: Vec<usize>,
    pub witness: Option<usize>,
}

impl CutCertificate {
    /// Re-check the certificate from scratch against g and c.
    pub fn check(&self, g: &Graph, c: &VertexColoring) -> bool {
        let (x, y) = (self.x, self.y);
        if x == y || x >= g.n() || y >= g.n() || c.len() != g.n() {
            return false;
        }
        if self.cut.iter().any(|&s| s == x || s == y || s >= g.n()) {
            return false;
        }
        let adjacent = g.has_edge(x, y);
        let rainbow_ok = match self.witness {
            None => !adjacent && is_rainbow(c, &self.cut),
            Some(w) => {
                let mut with_w = self.cut.clone();
                with_w.push(w);
                adjacent && (w == x || w == y) && is_rainbow(c, &with_w)
            }
        };
        rainbow_ok && is_vertex_cut(g, x, y, &self.cut).unwrap_or(false)
    }
}

/// Do the vertices of `s` all have distinct colors?
pub fn is_rainbow(c: &VertexColoring, s: &[usize]) -> bool {
    let mut seen: Vec<usize> = s.iter().map(|&v| c.color(v)).collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// Does removing `s` separate x from y? For adjacent pairs the edge xy is
/// removed first, so the empty set is a valid cut exactly when that edge
/// was their only connection.
pub fn is_vertex_cut(g: &Graph, x: usize, y: usize, s: &[usize]) -> Result<bool, GraphError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(GraphError::IdenticalEndpoints);
    }
    let mut blocked = vec![false; g.n()];
    for &v in s {
        g.check_vertex(v)?;
        if v == x || v == y {
            return Err(GraphError::CutTouchesEndpoint);
        }
        blocked[v] = true;
    }
    let skip = g.has_edge(x, y).then_some((x, y));
    let reach = g.reachable_avoiding(x, &blocked, skip);
    Ok(!reach[y])
}

/// Visit candidate rainbow subsets of `cands` (ascending vertex sequences,
/// at most one vertex per color class) of the given size, in lexicographic
/// order.
fn for_each_rainbow_subset<F>(
    cands: &[usize],
    c: &VertexColoring,
    size: usize,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn rec<F>(
        cands: &[usize],
        c: &VertexColoring,
        size: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        used: &mut Vec<bool>,
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if chosen.len() == size {
            return f(chosen);
        }
        // not enough candidates left to finish
        let need = size - chosen.len();
        for i in start..cands.len() {
            if cands.len() - i < need {
                break;
            }
            let v = cands[i];
            let col = c.color(v);
            if used[col] {
                continue;
            }
            used[col] = true;
            chosen.push(v);
            rec(cands, c, size, i + 1, chosen, used, f)?;
            chosen.pop();
            used[col] = false;
        }
        ControlFlow::Continue(())
    }
    let mut used = vec![false; c.max_color() + 1];
    let mut chosen = Vec::with_capacity(size);
    rec(cands, c, size, 0, &mut chosen, &mut used, f)
}

/// Search for a rainbow x–y vertex-cut under the coloring `c`. Candidate
/// sets are tried in increasing size starting from the Menger lower bound,
/// lexicographically within each size, so the returned certificate is the
/// lexicographically least one of minimum size. For adjacent pairs, a cut
/// whose union with x is rainbow is preferred over one needing y.
pub fn find_rainbow_cut(
    g: &Graph,
    c: &VertexColoring,
    x: usize,
    y: usize,
) -> Result<Option<CutCertificate>, GraphError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(GraphError::IdenticalEndpoints);
    }
    debug_assert_eq!(c.len(), g.n(), "coloring must cover the graph");
    let adjacent = g.has_edge(x, y);
    let cands: Vec<usize> = g.vertices().filter(|&v| v != x && v != y).collect();
    // No rainbow cut can beat the minimum vertex cut of the pair.
    let kappa = local_connectivity(g, x, y)?.value;
    let start = kappa.saturating_sub(usize::from(adjacent));
    let mut found: Option<CutCertificate> = None;
    for size in start..=cands.len() {
        let _ = for_each_rainbow_subset(&cands, c, size, &mut |s| {
            let witness = if adjacent {
                if !color_used(c, s, c.color(x)) {
                    Some(x)
                } else if !color_used(c, s, c.color(y)) {
                    Some(y)
                } else {
                    return ControlFlow::Continue(());
                }
            } else {
                None
            };
            if is_vertex_cut(g, x, y, s).expect("candidates avoid endpoints") {
                found = Some(CutCertificate { x, y, cut: s.to_vec(), witness });
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if found.is_some() {
            break;
        }
    }
    Ok(found)
}

fn color_used(c: &VertexColoring, s: &[usize], col: usize) -> bool {
    s.iter().any(|&v| c.color(v) == col)
}

/// Outcome of checking every pair of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    /// One certificate per pair, pairs in lexicographic order.
    Valid(Vec<CutCertificate>),
    /// The lexicographically first pair with no rainbow vertex-cut.
    Invalid { x: usize, y: usize },
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verification::Valid(_))
    }
}

/// Check whether `c` is an rvd-coloring of the connected graph `g`
/// (order ≥ 2), producing certificates for every pair or the first failing
/// pair.
pub fn verify_coloring(g: &Graph, c: &VertexColoring) -> Result<Verification, GraphError> {
    if g.n() < 2 {
        return Err(GraphError::OrderTooSmall { n: g.n(), min: 2 });
    }
    if !g.connected() {
        return Err(GraphError::Disconnected);
    }
    debug_assert_eq!(c.len(), g.n(), "coloring must cover the graph");
    let mut certs = Vec::with_capacity(g.n() * (g.n() - 1) / 2);
    for x in g.vertices() {
        for y in x + 1..g.n() {
            match find_rainbow_cut(g, c, x, y)? {
                Some(cert) => certs.push(cert),
                None => return Ok(Verification::Invalid { x, y }),
            }
        }
    }
    Ok(Verification::Valid(certs))
}
