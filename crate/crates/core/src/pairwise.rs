//! All k-shredders separating a fixed pair of vertices.

use crate::error::Result;
use crate::graph::Graph;
use crate::paths::{openly_disjoint_paths, PathIndex};
use crate::prune::{all_bridges, candidates_from, prune_mask};
use crate::record::{Provenance, ShredderRecord};

/// k-shredders with `x` and `y` in different components, with exact counts.
///
/// A candidate is the attachment set of a component of `G ∖ Π` meeting
/// every x–y path once; it is a shredder iff nothing straddles it. Its other
/// components are exactly the component bridges with that attachment set.
pub fn shredders_between(g: &Graph, x: usize, y: usize, k: usize) -> Result<Vec<ShredderRecord>> {
    let ps = openly_disjoint_paths(g, x, y, k)?;
    let mut idx = PathIndex::new(g.n());
    idx.load(&ps);
    let bridges = all_bridges(g, &idx);
    let (cands, tally) = candidates_from(&idx, &bridges);
    let alive = prune_mask(&idx, &cands, bridges.iter().map(|b| b.attachments.as_slice()));
    let mut out: Vec<ShredderRecord> = cands
        .iter()
        .zip(tally)
        .zip(alive)
        .filter(|(_, a)| *a)
        .map(|((c, t), _)| ShredderRecord::new(c.vertex_set(), t + 2, Provenance::Balanced))
        .collect();
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, VertexSet};

    #[test]
    fn examples() {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        let k33 = build_graph(6, &e).unwrap();
        let r = shredders_between(&k33, 0, 1, 3).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!((r[0].vertices.clone(), r[0].components), (VertexSet::new([3, 4, 5]), 3));
        assert!(shredders_between(&k33, 0, 3, 3).unwrap().is_empty());

        let star = build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = shredders_between(&star, 1, 2, 1).unwrap();
        assert_eq!((r[0].vertices.clone(), r[0].components), (VertexSet::new([0]), 3));
    }
}
