//! Sparse certificates from scan-first (maximum adjacency) forests.

use crate::graph::{build_graph, Graph};

/// Keep the union of the first `k + 1` scan-first forests.
///
/// Vertices are scanned in maximum-adjacency order; an edge from the
/// scanned vertex to an unscanned `w` joins forest number `r(w)` (after
/// incrementing it). Any dropped edge has `k + 1` openly-disjoint paths in
/// the kept graph, so removing `k` vertices cannot separate its endpoints.
pub fn sparsify(g: &Graph, k: usize) -> Graph {
    let n = g.n();
    let keep_upto = k + 1;
    let mut rank = vec![0usize; n];
    let mut scanned = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![(0..n).rev().collect()];
    let mut top = 0usize;
    let mut kept = vec![false; g.m()];
    let mut done = 0;
    while done < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !scanned[v] && rank[v] == top => break v,
                Some(_) => continue,
                None => top -= 1,
            }
        };
        scanned[v] = true;
        done += 1;
        for slot in g.slots(v) {
            let w = g.target(slot);
            if scanned[w] {
                continue;
            }
            rank[w] += 1;
            if rank[w] <= keep_upto {
                kept[g.edge_of_slot(slot)] = true;
            }
            let r = rank[w];
            if buckets.len() <= r {
                buckets.push(Vec::new());
            }
            buckets[r].push(w);
            top = top.max(r);
        }
    }
    let edges: Vec<(usize, usize)> =
        g.edges().iter().enumerate().filter(|(i, _)| kept[*i]).map(|(_, &e)| e).collect();
    build_graph(n, &edges).expect("subgraph of a valid graph")
}
