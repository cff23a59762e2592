//! Extremal size formulas and the witness graphs that attain them: how many
//! edges a connected graph of order n with rvd value k must have (minimum)
//! and may have (maximum, exact for k ≤ 3 and an interval for k ≥ 4).

use serde::Serialize;
use thiserror::Error;

use crate::coloring::VertexColoring;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("{msg}")]
    BadParameters { msg: String },
    #[error(
        "a graph colorable with one color is a tree, so its size is exactly n−1 = {}; \
         the max-size formulas start at k = 2",
        n - 1
    )]
    TreeCase { n: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<crate::coloring::ColoringError> for ExtremalError {
    fn from(e: crate::coloring::ColoringError) -> Self {
        ExtremalError::Invariant(e.to_string())
    }
}

fn bad(msg: String) -> ExtremalError {
    ExtremalError::BadParameters { msg }
}

/// Edge-count bounds for connected graphs of order `n` with rvd value `k`.
/// `max_size_lower` equals `max_size_upper` where equality is proved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SizeBound {
    pub n: usize,
    pub k: usize,
    pub min_size: usize,
    pub max_size_lower: usize,
    pub max_size_upper: usize,
}

/// Minimum size of a connected graph of order `n ≥ 4` with rvd value `k`:
/// n + k − 2 for k ≤ n − 1, and 2n − 4 + ⌈n/2⌉ for k = n.
pub fn min_size(n: usize, k: usize) -> Result<usize, ExtremalError> {
    if n < 4 || k == 0 || k > n {
        return Err(bad(format!(
            "min size needs n ≥ 4 and 1 ≤ k ≤ n, got n={n}, k={k}"
        )));
    }
    Ok(if k < n {
        n + k - 2
    } else {
        2 * n - 4 + n.div_ceil(2)
    })
}

/// Maximum-size bounds for connected graphs of order `n` with rvd value
/// `k ≥ 2`: exactly ⌊(k+1)(n−1)/2⌋ for k ∈ {2, 3}; for k ≥ 4, between
/// ⌈k(n−1)/2⌉ − C(k,2) and k(n−1) − C(k,2). k = 1 is flagged to the tree
/// fact instead.
pub fn max_size_bounds(n: usize, k: usize) -> Result<(usize, usize), ExtremalError> {
    if k == 1 {
        return Err(ExtremalError::TreeCase { n });
    }
    if k < 2 || k > n {
        return Err(bad(format!(
            "max size needs 2 ≤ k ≤ n, got n={n}, k={k}"
        )));
    }
    if k <= 3 {
        let exact = (k + 1) * (n - 1) / 2;
        return Ok((exact, exact));
    }
    let pairs = k * (k - 1) / 2;
    let lower = (k * (n - 1)).div_ceil(2) - pairs;
    let upper = k * (n - 1) - pairs;
    Ok((lower, upper))
}

/// Combined bounds; `k = 1` uses the tree fact (size exactly n − 1).
pub fn size_bounds(n: usize, k: usize) -> Result<SizeBound, ExtremalError> {
    let min = min_size(n, k)?;
    let (max_size_lower, max_size_upper) = if k == 1 {
        (n - 1, n - 1)
    } else {
        max_size_bounds(n, k)?
    };
    debug_assert!(min <= max_size_upper);
    Ok(SizeBound {
        n,
        k,
        min_size: min,
        max_size_lower,
        max_size_upper,
    })
}

/// Minimum-size witness G_k: vertices u = 0 and v = 1 joined by k paths of
/// length two (middle vertices 2..k+2), with n − k − 2 pendant vertices on u;
/// for k = n − 1, the n − 2 middles plus the edge uv. Size n + k − 2, rvd
/// value k. Returns the witness coloring: middles colored 1..k with u color 1
/// and the rest color 2; in the k = n − 1 variant the middles are colored
/// 1..n−2, u gets 1, v gets n − 1.
pub fn gen_gk(n: usize, k: usize) -> Result<(Graph, VertexColoring), ExtremalError> {
    if n < 2 || k == 0 || k > n - 1 {
        return Err(bad(format!(
            "G_k needs 1 ≤ k ≤ n−1 (and so n ≥ k+2 when k ≤ n−2), got n={n}, k={k}"
        )));
    }
    let mut g = Graph::empty(n)?;
    let middles = if k == n - 1 { n - 2 } else { k };
    for i in 0..middles {
        g.add_edge(0, 2 + i)?;
        g.add_edge(1, 2 + i)?;
    }
    for p in 2 + middles..n {
        g.add_edge(0, p)?;
    }
    let mut colors = vec![0; n];
    if k == n - 1 {
        g.add_edge(0, 1)?;
        colors[0] = 1;
        colors[1] = if n == 2 { 1 } else { n - 1 };
        for i in 0..middles {
            colors[2 + i] = i + 1;
        }
    } else {
        colors[0] = 1;
        colors[1] = 2;
        for i in 0..middles {
            colors[2 + i] = i + 1;
        }
        for p in 2 + middles..n {
            colors[p] = 2;
        }
    }
    debug_assert_eq!(g.m(), n + k - 2);
    Ok((g, VertexColoring::new(colors)?))
}

/// Minimum-size witness for rvd = n: G_{n−1} plus a perfect matching on the
/// middle vertices in index order, folding an odd leftover into one 3-vertex
/// path. Size 2n − 4 + ⌈n/2⌉; every vertex pair has two common neighbors.
pub fn gen_h(n: usize) -> Result<Graph, ExtremalError> {
    if n < 4 {
        return Err(bad(format!("H needs n ≥ 4, got n={n}")));
    }
    let (mut g, _) = gen_gk(n, n - 1)?;
    let middles: Vec<usize> = (2..n).collect();
    let c = middles.len();
    let paired = if c % 2 == 0 { c } else { c - 3 };
    for pair in middles[..paired].chunks(2) {
        g.add_edge(pair[0], pair[1])?;
    }
    if c % 2 == 1 {
        let tail = &middles[paired..];
        g.add_edge(tail[0], tail[1])?;
        g.add_edge(tail[1], tail[2])?;
    }
    debug_assert_eq!(g.m(), 2 * n - 4 + n.div_ceil(2));
    Ok(g)
}

/// Maximum-size witness for rvd = 2: a path of triangle blocks sharing cut
/// vertices, with a pendant edge when the order is even.
/// Size ⌊3(n−1)/2⌋.
pub fn gen_triangle_blocks(n: usize) -> Result<Graph, ExtremalError> {
    if n < 3 {
        return Err(bad(format!("triangle blocks need n ≥ 3, got n={n}")));
    }
    let mut g = Graph::empty(n)?;
    let triangles = (n - 1) / 2;
    for t in 0..triangles {
        let base = 2 * t;
        g.add_edge(base, base + 1)?;
        g.add_edge(base, base + 2)?;
        g.add_edge(base + 1, base + 2)?;
    }
    if n % 2 == 0 {
        g.add_edge(n - 2, n - 1)?;
    }
    debug_assert_eq!(g.m(), (3 * (n - 1)) / 2);
    Ok(g)
}

/// Lower-bound witness for the k ≥ 4 maximum: ⌊(n−1)/(k−1)⌋ copies of K_k in
/// a path of shared cut vertices, closed by one K_t on the remaining
/// t = n − (k−1)⌊(n−1)/(k−1)⌋ vertices when t ≥ 2. rvd value k.
pub fn gen_clique_chain(n: usize, k: usize) -> Result<Graph, ExtremalError> {
    if k < 4 || n < k {
        return Err(bad(format!(
            "clique chain needs k ≥ 4 and n ≥ k (smaller values have exact witnesses), \
             got n={n}, k={k}"
        )));
    }
    let b = (n - 1) / (k - 1);
    let t = n - (k - 1) * b;
    let mut g = Graph::empty(n)?;
    let clique = |g: &mut Graph, start: usize, size: usize| -> Result<(), GraphError> {
        for u in start..start + size {
            for v in u + 1..start + size {
                g.add_edge(u, v)?;
            }
        }
        Ok(())
    };
    for i in 0..b {
        clique(&mut g, i * (k - 1), k)?;
    }
    if t >= 2 {
        clique(&mut g, b * (k - 1), t)?;
    }
    Ok(g)
}
