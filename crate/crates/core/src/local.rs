//! Budgeted local listing around a seed vertex and its path system.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{components, volume, Graph, VertexSet};
use crate::paths::{as_tuple, Candidate, PathIndex, PathSystem};
use crate::prune::prune_mask;
use crate::record::{Provenance, ShredderRecord};
use crate::stamp::Stamps;

/// Seed vertex, volume budget and a path system leaving the seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaptureTuple {
    pub x: usize,
    pub nu: usize,
    pub paths: PathSystem,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LocalResult {
    /// Verified k-shredders; counts are exact when the tuple captures the
    /// shredder and lower bounds otherwise.
    pub shredders: Vec<ShredderRecord>,
    /// A k-separator cutting x from every far end, possibly a shredder.
    pub unverified: Option<VertexSet>,
    /// Volume of the component of x in `G ∖ unverified`.
    pub vol_qx: Option<usize>,
    /// Each unverified vertex paired with the far end of its path.
    pub frontier: Vec<(usize, usize)>,
}

struct Recorded {
    /// Range into the stored attachments, sorted.
    atts: (usize, usize),
    /// Range into the stored component vertices; `None` for edge bridges.
    comp: Option<(usize, usize)>,
}

/// Reusable scratch space for [`local_list`] on one graph.
pub struct LocalLister {
    idx: PathIndex,
    vis: Stamps,
    seen_slot: Stamps,
    registered: Stamps,
    edge_recorded: Stamps,
    att: Stamps,
    stack: Vec<usize>,
    pend_edges: Vec<(usize, usize, usize)>,
    pend_comps: Vec<(usize, usize, usize, usize)>,
    comp_buf: Vec<usize>,
    att_buf: Vec<usize>,
    recorded: Vec<Recorded>,
    stored: Vec<usize>,
    stored_atts: Vec<usize>,
}

impl LocalLister {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        LocalLister {
            idx: PathIndex::new(n),
            vis: Stamps::new(n),
            seen_slot: Stamps::new(g.slot_count()),
            registered: Stamps::new(n),
            edge_recorded: Stamps::new(g.m()),
            att: Stamps::new(n),
            stack: Vec::new(),
            pend_edges: Vec::new(),
            pend_comps: Vec::new(),
            comp_buf: Vec::new(),
            att_buf: Vec::new(),
            recorded: Vec::new(),
            stored: Vec::new(),
            stored_atts: Vec::new(),
        }
    }

    /// Explore every unexplored bridge at `u`; `true` once the budget is blown.
    fn explore_at(&mut self, g: &Graph, u: usize, nu: usize, explored: &mut usize) -> bool {
        for slot in g.slots(u) {
            if self.seen_slot.get(slot) {
                continue;
            }
            let w = g.target(slot);
            if self.idx.on_path(w) {
                if self.idx.is_path_edge(u, w) {
                    continue;
                }
                self.seen_slot.set(slot);
                self.seen_slot.set(g.twin(slot));
                *explored += 1;
                if *explored > nu {
                    return true;
                }
                self.pend_edges.push((u, w, g.edge_of_slot(slot)));
                continue;
            }
            if self.vis.get(w) {
                continue;
            }
            let comp_start = self.comp_buf.len();
            let att_start = self.att_buf.len();
            self.att.clear();
            self.seen_slot.set(slot);
            self.seen_slot.set(g.twin(slot));
            *explored += 1;
            if *explored > nu {
                return true;
            }
            self.att.set(u);
            self.att_buf.push(u);
            self.vis.set(w);
            self.stack.clear();
            self.stack.push(w);
            while let Some(q) = self.stack.pop() {
                self.comp_buf.push(q);
                for s2 in g.slots(q) {
                    if self.seen_slot.get(s2) {
                        continue;
                    }
                    self.seen_slot.set(s2);
                    self.seen_slot.set(g.twin(s2));
                    *explored += 1;
                    if *explored > nu {
                        return true;
                    }
                    let t = g.target(s2);
                    if self.idx.on_path(t) {
                        if self.att.insert(t) {
                            self.att_buf.push(t);
                        }
                    } else if self.vis.insert(t) {
                        self.stack.push(t);
                    }
                }
            }
            self.pend_comps.push((comp_start, self.comp_buf.len(), att_start, self.att_buf.len()));
        }
        false
    }

    fn discard_pending(&mut self) {
        self.pend_edges.clear();
        self.pend_comps.clear();
        self.comp_buf.clear();
        self.att_buf.clear();
    }

    fn commit(&mut self) {
        for &(u, w, e) in &self.pend_edges {
            if self.edge_recorded.insert(e) {
                let a = self.stored_atts.len();
                self.stored_atts.extend([u.min(w), u.max(w)]);
                self.recorded.push(Recorded { atts: (a, a + 2), comp: None });
            }
        }
        for &(cs, ce, a_s, a_e) in &self.pend_comps {
            if self.registered.get(self.comp_buf[cs]) {
                continue;
            }
            let start = self.stored.len();
            for &v in &self.comp_buf[cs..ce] {
                self.registered.set(v);
                self.stored.push(v);
            }
            let a = self.stored_atts.len();
            self.stored_atts.extend_from_slice(&self.att_buf[a_s..a_e]);
            self.stored_atts[a..].sort_unstable();
            let atts = (a, self.stored_atts.len());
            self.recorded.push(Recorded { atts, comp: Some((start, self.stored.len())) });
        }
        self.discard_pending();
    }

    /// Run the local listing for `(x, nu, ps)`; the tuple is trusted.
    pub fn list(&mut self, g: &Graph, x: usize, nu: usize, ps: &PathSystem) -> LocalResult {
        self.idx.load(ps);
        self.registered.clear();
        self.edge_recorded.clear();
        self.recorded.clear();
        self.stored.clear();
        self.stored_atts.clear();
        let k = ps.k();
        let mut frontier: Vec<(usize, usize)> = Vec::with_capacity(k);
        for path in ps.paths() {
            self.vis.clear();
            self.seen_slot.clear();
            let mut explored = 0usize;
            let last = path.len() - 1;
            for (d, &u) in path.iter().enumerate() {
                if d == last {
                    frontier.push((u, path[last]));
                    break;
                }
                if self.explore_at(g, u, nu, &mut explored) {
                    self.discard_pending();
                    if d == 0 {
                        return LocalResult::default();
                    }
                    frontier.push((u, path[last]));
                    break;
                }
                self.commit();
            }
        }

        // Candidates from component bridges, deduplicated with tallies.
        let store = &self.stored_atts;
        let atts_of = |r: &Recorded| &store[r.atts.0..r.atts.1];
        let mut by_set: HashMap<&[usize], usize> = HashMap::new();
        let mut cands: Vec<Candidate> = Vec::new();
        let mut tally: Vec<usize> = Vec::new();
        for (bi, r) in self.recorded.iter().enumerate() {
            if r.comp.is_none() {
                continue;
            }
            if let Some(&j) = by_set.get(atts_of(r)) {
                tally[j] += 1;
                continue;
            }
            if let Some(t) = as_tuple(&self.idx, atts_of(r), Some(bi)) {
                by_set.insert(atts_of(r), cands.len());
                cands.push(t);
                tally.push(1);
            }
        }
        let listed = cands.len();
        let u_vertices: Vec<usize> = frontier.iter().map(|f| f.0).collect();
        let u_tuple = as_tuple(&self.idx, &u_vertices, None);
        let u_is_tuple = u_tuple.is_some();
        let u_deltas = u_tuple.as_ref().map(|t| t.deltas.clone());
        if let Some(t) = u_tuple {
            cands.push(t);
        }
        let straddlers = self
            .recorded
            .iter()
            .map(atts_of)
            .chain((!u_is_tuple).then_some(u_vertices.as_slice()));
        let alive = prune_mask(&self.idx, &cands, straddlers);

        let shredders: Vec<ShredderRecord> = (0..listed)
            .filter(|&i| alive[i])
            .map(|i| ShredderRecord::new(cands[i].vertex_set(), tally[i] + 2, Provenance::Local))
            .collect();

        let mut result = LocalResult { shredders, ..LocalResult::default() };
        let Some(u_deltas) = u_deltas else { return result };
        if !alive[listed] {
            return result;
        }
        result.vol_qx = Some(self.volume_of_source_side(g, x, ps, &u_deltas));
        result.unverified = Some(VertexSet::new(u_vertices));
        result.frontier = frontier;
        result
    }

    /// vol of x's side: path prefixes before the frontier plus every recorded
    /// component bridge hanging off them.
    fn volume_of_source_side(&mut self, g: &Graph, x: usize, ps: &PathSystem, u_deltas: &[usize]) -> usize {
        self.att.clear();
        let mut members = vec![x];
        self.att.set(x);
        for (p, path) in ps.paths().iter().enumerate() {
            for &v in &path[1..u_deltas[p]] {
                self.att.set(v);
                members.push(v);
            }
        }
        let idx = &self.idx;
        let in_prefix = |a: usize| a == x || matches!(idx.single(a), Some((p, d)) if d < u_deltas[p]);
        for r in &self.recorded {
            if let Some((s, e)) = r.comp {
                if self.stored_atts[r.atts.0..r.atts.1].iter().any(|&a| in_prefix(a)) {
                    for &v in &self.stored[s..e] {
                        self.att.set(v);
                        members.push(v);
                    }
                }
            }
        }
        let mut vol = 0;
        for &v in &members {
            for &w in g.neighbors(v) {
                if !self.att.get(w) || w > v {
                    vol += 1;
                }
            }
        }
        vol
    }
}

/// Local listing for a capture tuple, validating it first.
pub fn local_list(g: &Graph, t: &CaptureTuple) -> Result<LocalResult> {
    t.paths.validate(g)?;
    if t.paths.source() != t.x {
        return Err(Error::MalformedTuple("paths do not start at x".into()));
    }
    if t.nu == 0 || !t.nu.is_power_of_two() {
        return Err(Error::MalformedTuple(format!("budget {} is not a power of two", t.nu)));
    }
    Ok(LocalLister::new(g).list(g, t.x, t.nu, &t.paths))
}

/// Whether `t` captures the shredder `s`.
///
/// Any maximum-volume component may play the role of the large side.
pub fn check_capture(g: &Graph, t: &CaptureTuple, s: &VertexSet) -> bool {
    let Ok(comps) = components(g, s) else { return false };
    if comps.len() < 2 || t.paths.validate(g).is_err() || t.paths.source() != t.x {
        return false;
    }
    let k = s.len();
    if t.paths.k() != k || t.paths.total_length() > k * k * t.nu {
        return false;
    }
    let vols: Vec<usize> = comps.iter().map(|c| volume(g, c).expect("in range")).collect();
    let total: usize = vols.iter().sum();
    let top = *vols.iter().max().expect("nonempty");
    let ends = t.paths.far_ends();
    comps.iter().zip(&vols).filter(|(_, &v)| v == top).any(|(c, &vc)| {
        let vol_rest = total - vc;
        !c.contains(t.x)
            && !s.contains(t.x)
            && 2 * vol_rest > t.nu
            && vol_rest <= t.nu
            && ends.iter().all(|&e| c.contains(e))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn star4() -> Graph {
        build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn star_trace() {
        let g = star4();
        let t = CaptureTuple { x: 1, nu: 2, paths: PathSystem::new(&g, 1, vec![vec![1, 0, 2]]).unwrap() };
        let r = local_list(&g, &t).unwrap();
        assert_eq!(r.shredders.len(), 1);
        assert_eq!(r.shredders[0].vertices, VertexSet::new([0]));
        assert_eq!(r.shredders[0].components, 3);
        assert!(r.unverified.is_none());
        assert!(check_capture(&g, &t, &VertexSet::new([0])));
        let wide = CaptureTuple { nu: 8, ..t.clone() };
        assert!(!check_capture(&g, &wide, &VertexSet::new([0])));
        let short = CaptureTuple { x: 1, nu: 2, paths: PathSystem::new(&g, 1, vec![vec![1, 0]]).unwrap() };
        assert!(!check_capture(&g, &short, &VertexSet::new([0])));
    }

    #[test]
    fn path_trace() {
        let g = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        let t = CaptureTuple { x: 0, nu: 1, paths: PathSystem::new(&g, 0, vec![vec![0, 1, 2]]).unwrap() };
        let r = local_list(&g, &t).unwrap();
        assert!(r.shredders.is_empty());
        assert!(r.unverified.is_none());
    }

    #[test]
    fn blown_budget_at_source() {
        // x = 0 has two pendant-ish neighbors beyond the path
        let g = build_graph(5, &[(0, 1), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let t = CaptureTuple { x: 0, nu: 1, paths: PathSystem::new(&g, 0, vec![vec![0, 1, 2]]).unwrap() };
        assert_eq!(local_list(&g, &t).unwrap(), LocalResult::default());
    }

    #[test]
    fn unverified_frontier() {
        // x = 4 hangs off {0, 1}; the rest is a clique on {0, 1, 2, 3}
        let g = build_graph(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)]).unwrap();
        let ps = PathSystem::new(&g, 4, vec![vec![4, 0, 2], vec![4, 1, 3]]).unwrap();
        let r = local_list(&g, &CaptureTuple { x: 4, nu: 1, paths: ps }).unwrap();
        assert_eq!(r.unverified, Some(VertexSet::new([0, 1])));
        assert_eq!(r.vol_qx, Some(2));
        assert!(r.shredders.is_empty());
    }

    #[test]
    fn rejects_bad_tuples() {
        let g = star4();
        let ps = PathSystem::new(&g, 1, vec![vec![1, 0, 2]]).unwrap();
        assert!(local_list(&g, &CaptureTuple { x: 2, nu: 2, paths: ps.clone() }).is_err());
        assert!(local_list(&g, &CaptureTuple { x: 1, nu: 3, paths: ps }).is_err());
    }
}
