//! Exact vertex connectivity by max flow around a minimum-degree pivot.

use crate::flow::SplitFlow;
use crate::graph::{Graph, VertexSet};

/// A minimum vertex cut with its size, or `None` for complete graphs.
///
/// Disconnected graphs report `(0, ∅)`.
pub fn min_vertex_cut(g: &Graph) -> Option<(usize, VertexSet)> {
    if g.is_complete() {
        return None;
    }
    if !g.is_connected() {
        return Some((0, VertexSet::empty()));
    }
    let n = g.n();
    let v = (0..n).min_by_key(|&v| g.degree(v)).expect("n > 0");
    // v has minimum degree and the graph is not complete, so v has a
    // non-neighbor and N(v) separates it.
    let mut best = g.degree(v);
    let mut witness = VertexSet::new(g.neighbors(v).iter().copied());

    let mut f = SplitFlow::new(g, v, v);
    let mut try_pair = |a: usize, b: usize, best: &mut usize, witness: &mut VertexSet| {
        f.reset(a, b);
        if f.run(*best) < *best {
            *best = f.value();
            *witness = f.min_cut();
        }
    };
    for u in 0..n {
        if u != v && !g.has_edge(u, v) {
            try_pair(v, u, &mut best, &mut witness);
        }
    }
    let nb = g.neighbors(v);
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !g.has_edge(a, b) {
                try_pair(a, b, &mut best, &mut witness);
            }
        }
    }
    Some((best, witness))
}

/// κ(G); `n − 1` for complete graphs and 0 for disconnected ones.
pub fn vertex_connectivity(g: &Graph) -> usize {
    match min_vertex_cut(g) {
        None => g.n().saturating_sub(1),
        Some((k, _)) => k,
    }
}
