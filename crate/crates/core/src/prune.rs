//! Bridges of a path system, the straddle relation, and candidate pruning.

use crate::graph::{Graph, VertexSet};
use crate::paths::{as_tuple, Candidate, PathIndex, PathSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BridgeKind {
    Component(VertexSet),
    Edge(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    pub kind: BridgeKind,
    pub attachments: VertexSet,
    pub volume: usize,
}

/// Components of `G ∖ Π` and non-path edges between path vertices.
///
/// With a scope, only bridges attached to some scope vertex are returned.
pub fn bridges_of(g: &Graph, ps: &PathSystem, scope: Option<&VertexSet>) -> Vec<Bridge> {
    let mut idx = PathIndex::new(g.n());
    idx.load(ps);
    let mut out = all_bridges(g, &idx);
    if let Some(scope) = scope {
        out.retain(|b| b.attachments.iter().any(|a| scope.contains(a)));
    }
    out
}

pub(crate) fn all_bridges(g: &Graph, idx: &PathIndex) -> Vec<Bridge> {
    let n = g.n();
    let mut out = Vec::new();
    let mut seen = vec![false; n];
    let mut mark = vec![usize::MAX; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] || idx.on_path(s) {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        let mut atts = Vec::new();
        let mut vol = 0;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if idx.on_path(w) {
                    vol += 1;
                    if mark[w] != s {
                        mark[w] = s;
                        atts.push(w);
                    }
                } else {
                    if w > u {
                        vol += 1;
                    }
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        out.push(Bridge { kind: BridgeKind::Component(VertexSet::new(comp)), attachments: VertexSet::new(atts), volume: vol });
    }
    for &(u, v) in g.edges() {
        if idx.on_path(u) && idx.on_path(v) && !idx.is_path_edge(u, v) {
            out.push(Bridge { kind: BridgeKind::Edge(u, v), attachments: VertexSet::new([u, v]), volume: 1 });
        }
    }
    out
}

/// Whether a set of attachments straddles candidate `b`.
pub fn straddles(g: &Graph, attachments: &VertexSet, b: &Candidate, ps: &PathSystem) -> bool {
    let mut idx = PathIndex::new(g.n());
    idx.load(ps);
    straddles_idx(&idx, attachments.as_slice(), b)
}

pub(crate) fn straddles_idx(idx: &PathIndex, atts: &[usize], b: &Candidate) -> bool {
    let (mut before, mut after) = (false, false);
    for &a in atts {
        idx.for_each(a, |p, d| {
            if d < b.deltas[p] {
                before = true;
            } else if d > b.deltas[p] {
                after = true;
            }
        });
    }
    before && after
}

/// Candidates straddled neither by another candidate nor by a bridge.
pub fn prune_candidates(g: &Graph, cands: &[Candidate], bridges: &[Bridge], ps: &PathSystem) -> Vec<Candidate> {
    let mut idx = PathIndex::new(g.n());
    idx.load(ps);
    let alive = prune_mask(&idx, cands, bridges.iter().map(|b| b.attachments.as_slice()));
    cands.iter().zip(alive).filter(|(_, a)| *a).map(|(c, _)| c.clone()).collect()
}

/// Survival flags, in input order.
///
/// Candidate-vs-candidate straddles are column inversions of the
/// lexicographically sorted delta table. The survivors are then totally
/// ordered, so every straddler kills a contiguous run of them.
pub(crate) fn prune_mask<'a, I>(idx: &PathIndex, cands: &[Candidate], straddlers: I) -> Vec<bool>
where
    I: IntoIterator<Item = &'a [usize]>,
{
    let k = idx.k();
    let c = cands.len();
    let mut alive = vec![true; c];
    if c == 0 {
        return alive;
    }
    let mut order: Vec<usize> = (0..c).collect();
    order.sort_by(|&a, &b| cands[a].deltas.cmp(&cands[b].deltas));
    for p in 0..k {
        let mut hi = 0;
        for &i in &order {
            let d = cands[i].deltas[p];
            if d < hi {
                alive[i] = false;
            }
            hi = hi.max(d);
        }
        let mut lo = usize::MAX;
        for &i in order.iter().rev() {
            let d = cands[i].deltas[p];
            if d > lo {
                alive[i] = false;
            }
            lo = lo.min(d);
        }
    }
    let surv: Vec<usize> = order.into_iter().filter(|&i| alive[i]).collect();
    let s = surv.len();
    if s == 0 {
        return alive;
    }
    let cols: Vec<Vec<usize>> = (0..k).map(|p| surv.iter().map(|&i| cands[i].deltas[p]).collect()).collect();
    for col in &cols {
        assert!(col.windows(2).all(|w| w[0] <= w[1]), "pruned candidates are not totally ordered");
    }
    let mut diff = vec![0i64; s + 1];
    for atts in straddlers {
        let mut lo = s;
        let mut hi = 0;
        let mut any = false;
        for &a in atts {
            idx.for_each(a, |p, d| {
                any = true;
                let col = &cols[p];
                lo = lo.min(col.partition_point(|&x| x <= d));
                hi = hi.max(col.partition_point(|&x| x < d));
            });
        }
        if any && lo < hi {
            diff[lo] += 1;
            diff[hi] -= 1;
        }
    }
    let mut run = 0;
    for (j, &i) in surv.iter().enumerate() {
        run += diff[j];
        if run > 0 {
            alive[i] = false;
        }
    }
    alive
}

/// Candidates generated by component bridges, deduplicated, with tallies of
/// how many component bridges share each attachment set.
pub(crate) fn candidates_from(idx: &PathIndex, bridges: &[Bridge]) -> (Vec<Candidate>, Vec<usize>) {
    let mut by_set: std::collections::HashMap<&[usize], usize> = std::collections::HashMap::new();
    let mut cands = Vec::new();
    let mut tally = Vec::new();
    for (bi, b) in bridges.iter().enumerate() {
        if !matches!(b.kind, BridgeKind::Component(_)) {
            continue;
        }
        let key = b.attachments.as_slice();
        if let Some(&j) = by_set.get(key) {
            tally[j] += 1;
            continue;
        }
        if let Some(t) = as_tuple(idx, key, Some(bi)) {
            by_set.insert(key, cands.len());
            cands.push(t);
            tally.push(1);
        }
    }
    (cands, tally)
}
