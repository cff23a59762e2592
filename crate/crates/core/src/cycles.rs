//! Deterministic cycle enumeration. A cycle is reported once, as the
//! canonical sequence [v0, …, v_{ℓ−1}]: v0 is its smallest vertex and the
//! second entry is smaller than the last, fixing the direction. For a given
//! length, sequences are produced in lexicographic order.

use crate::graph::Graph;
use std::ops::ControlFlow;

pub(crate) fn for_each_cycle_of_length<F>(g: &Graph, len: usize, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if len < 3 || len > g.n() {
        return ControlFlow::Continue(());
    }
    let mut path = Vec::with_capacity(len);
    let mut on_path = vec![false; g.n()];
    for v0 in g.vertices() {
        path.push(v0);
        on_path[v0] = true;
        extend(g, len, &mut path, &mut on_path, f)?;
        on_path[v0] = false;
        path.pop();
    }
    ControlFlow::Continue(())
}

fn extend<F>(
    g: &Graph,
    len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let v0 = path[0];
    if path.len() == len {
        let last = *path.last().unwrap();
        if g.has_edge(last, v0) && path[1] < last {
            f(path)?;
        }
        return ControlFlow::Continue(());
    }
    let cur = *path.last().unwrap();
    for u in g.neighbors(cur) {
        if u > v0 && !on_path[u] {
            path.push(u);
            on_path[u] = true;
            extend(g, len, path, on_path, f)?;
            on_path[u] = false;
            path.pop();
        }
    }
    ControlFlow::Continue(())
}

pub(crate) fn first_cycle_of_length(g: &Graph, len: usize) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = for_each_cycle_of_length(g, len, &mut |cycle| {
        found = Some(cycle.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// No edge joins two non-consecutive vertices of the cycle.
pub(crate) fn is_chordless(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    for i in 0..len {
        for j in i + 2..len {
            if i == 0 && j == len - 1 {
                continue;
            }
            if g.has_edge(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}
