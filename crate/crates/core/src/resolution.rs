//! Deciding whether unverified separators from local listing are shredders.

use std::collections::{HashMap, HashSet};

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{inner_edges, log_n, Graph, VertexSet};
use crate::oracle::FailureOracle;
use crate::record::{Provenance, SamplingConfig, ShredderRecord};
use crate::stamp::Stamps;

/// An unverified k-separator together with the local run that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnverifiedRecord {
    pub x: usize,
    pub nu: usize,
    pub u: VertexSet,
    /// Each vertex of `u` with the far end of its path.
    pub frontier: Vec<(usize, usize)>,
    /// Volume of the component of x in `G ∖ u`.
    pub vol_qx: usize,
}

fn low_degree_vertex(g: &Graph, r: &UnverifiedRecord) -> Option<(usize, usize)> {
    r.frontier.iter().copied().find(|&(u, _)| g.degree(u) <= r.nu)
}

/// True iff `r.u` is a shredder with a vertex of degree at most `r.nu`.
pub fn low_degree_check(g: &Graph, oracle: &mut FailureOracle<'_>, r: &UnverifiedRecord) -> bool {
    let Some((u, z)) = low_degree_vertex(g, r) else { return false };
    oracle.update(&r.u);
    g.neighbors(u)
        .iter()
        .filter(|&&y| !r.u.contains(y))
        .any(|&y| !oracle.connected(y, r.x).unwrap_or(true) && !oracle.connected(y, z).unwrap_or(true))
}

/// Components of `G ∖ r.u`, counted through the DFS-tree pieces around a
/// low-degree vertex of `r.u`.
///
/// Every component touches that vertex. A component made only of hanging
/// subtrees is a single tree piece; otherwise all its pieces reach the same
/// internal representatives, so only the first piece seen counts. Roots and
/// representatives are tracked separately since a root may be one.
pub fn count_low_degree_components(g: &Graph, oracle: &mut FailureOracle<'_>, r: &UnverifiedRecord) -> Result<usize> {
    let (u, _) = low_degree_vertex(g, r)
        .ok_or_else(|| Error::PreconditionViolated("no vertex of degree at most nu".into()))?;
    oracle.update(&r.u);
    let reps = oracle.internal_representatives(&r.u);
    let mut seen_roots = HashSet::new();
    let mut seen_reps = vec![false; reps.len()];
    let mut count = 0;
    for &y in g.neighbors(u) {
        if r.u.contains(y) {
            continue;
        }
        if !seen_roots.insert(oracle.component_root(y, &r.u)?) {
            continue;
        }
        let mut fresh = true;
        for (i, &v) in reps.iter().enumerate() {
            if oracle.connected(y, v)? {
                if seen_reps[i] {
                    fresh = false;
                } else {
                    seen_reps[i] = true;
                }
            }
        }
        if fresh {
            count += 1;
        }
    }
    Ok(count)
}

/// Whether two components of the given volumes leave room for a third.
pub fn volume_checksum(g: &Graph, u: &VertexSet, vol_q1: usize, vol_q2: usize) -> bool {
    vol_q1 + vol_q2 + inner_edges(g, u.as_slice()) < g.m()
}

#[derive(Default)]
struct Found {
    /// Smallest vertex of each component found so far.
    comps: HashSet<usize>,
    vol: usize,
    emitted: bool,
}

struct Bfs {
    inside: Stamps,
    done: Stamps,
    boundary: Stamps,
    members: Vec<usize>,
    nbrs: Vec<usize>,
}

impl Bfs {
    /// Component of `y` among vertices of degree at most `cap`, stopping once
    /// more than `budget` edges are scanned. Volume on success.
    fn run(&mut self, g: &Graph, y: usize, cap: usize, budget: usize) -> Option<usize> {
        self.inside.clear();
        self.done.clear();
        self.boundary.clear();
        self.members.clear();
        self.nbrs.clear();
        self.inside.set(y);
        self.members.push(y);
        let mut scanned = 0;
        let mut i = 0;
        while i < self.members.len() {
            let q = self.members[i];
            i += 1;
            self.done.set(q);
            for &w in g.neighbors(q) {
                if self.done.get(w) {
                    continue;
                }
                scanned += 1;
                if scanned > budget {
                    return None;
                }
                if self.inside.get(w) {
                    continue;
                }
                if g.degree(w) > cap {
                    if self.boundary.insert(w) {
                        self.nbrs.push(w);
                    }
                } else {
                    self.inside.set(w);
                    self.members.push(w);
                }
            }
        }
        self.nbrs.sort_unstable();
        Some(scanned)
    }

    /// Component of `x` in `G ∖ u` if its volume is at most `budget`.
    fn avoiding(&mut self, g: &Graph, x: usize, u: &VertexSet, budget: usize) -> Option<(usize, usize)> {
        self.inside.clear();
        self.done.clear();
        self.members.clear();
        self.inside.set(x);
        self.members.push(x);
        let mut scanned = 0;
        let mut i = 0;
        let mut low = x;
        while i < self.members.len() {
            let q = self.members[i];
            i += 1;
            self.done.set(q);
            for &w in g.neighbors(q) {
                if self.done.get(w) {
                    continue;
                }
                scanned += 1;
                if scanned > budget {
                    return None;
                }
                if !self.inside.get(w) && !u.contains(w) {
                    self.inside.set(w);
                    self.members.push(w);
                    low = low.min(w);
                }
            }
        }
        Some((low, scanned))
    }
}

/// Shredders among the records whose vertices all have high degree, found by
/// growing small components from sampled edges.
///
/// Counts are the found components plus one if their volumes leave edges
/// unaccounted for; at least 3, exact once all but one are found.
pub fn high_degree_extract<R: Rng + ?Sized>(
    g: &Graph,
    records: &[UnverifiedRecord],
    rng: &mut R,
    cfg: &SamplingConfig,
) -> Vec<ShredderRecord> {
    if records.is_empty() || g.m() == 0 {
        return Vec::new();
    }
    let k = records[0].u.len().max(1);
    let mut by_set: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for (i, r) in records.iter().enumerate() {
        by_set.entry(r.u.as_slice()).or_default().push(i);
    }
    let mut found: HashMap<&[usize], Found> = HashMap::new();
    let mut bfs = Bfs {
        inside: Stamps::new(g.n()),
        done: Stamps::new(g.n()),
        boundary: Stamps::new(g.n()),
        members: Vec::new(),
        nbrs: Vec::new(),
    };
    let m = g.m();
    let logn = log_n(g.n());
    let mut nu = 1usize;
    loop {
        let samples = cfg.hit_factor * m.div_ceil(nu) * logn;
        for _ in 0..samples {
            let slot = rng.gen_range(0..g.slot_count());
            let y = g.target(slot);
            if g.degree(y) > nu {
                continue;
            }
            let Some(vol_qy) = bfs.run(g, y, nu, nu) else { continue };
            let Some((u_key, idxs)) = by_set.get_key_value(bfs.nbrs.as_slice()) else { continue };
            let low = bfs.members.iter().copied().min().expect("nonempty");
            let entry = found.entry(u_key).or_default();
            if !entry.comps.insert(low) {
                continue;
            }
            entry.vol += vol_qy;
            if entry.emitted {
                continue;
            }
            let Some(&ri) = idxs.iter().find(|&&i| !bfs.inside.get(records[i].x)) else { continue };
            let r = &records[ri];
            if !volume_checksum(g, &r.u, r.vol_qx, vol_qy) {
                continue;
            }
            entry.emitted = true;
            if let Some((lx, vx)) = bfs.avoiding(g, r.x, &r.u, r.vol_qx) {
                if entry.comps.insert(lx) {
                    entry.vol += vx;
                }
            }
        }
        if nu * k >= m {
            break;
        }
        nu *= 2;
    }
    let mut out: Vec<ShredderRecord> = found
        .into_iter()
        .filter(|(_, f)| f.emitted)
        .map(|(u, f)| {
            let rest = m - inner_edges(g, u) - f.vol;
            let count = f.comps.len() + usize::from(rest > 0);
            ShredderRecord::new(VertexSet::new(u.iter().copied()), count, Provenance::HighDegree)
        })
        .collect();
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn checksum_examples() {
        let star = build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(volume_checksum(&star, &VertexSet::new([0]), 1, 1));
        let p3 = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!volume_checksum(&p3, &VertexSet::new([1]), 1, 1));
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        let k33 = build_graph(6, &e).unwrap();
        assert!(volume_checksum(&k33, &VertexSet::new([0, 1, 2]), 3, 3));
    }

    fn rec(x: usize, nu: usize, u: &[usize], far: usize, vol_qx: usize) -> UnverifiedRecord {
        UnverifiedRecord {
            x,
            nu,
            u: VertexSet::new(u.iter().copied()),
            frontier: u.iter().map(|&v| (v, far)).collect(),
            vol_qx,
        }
    }

    #[test]
    fn low_degree_examples() {
        let star = build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut o = FailureOracle::preprocess(&star).unwrap();
        let r = rec(1, 4, &[0], 2, 1);
        assert!(low_degree_check(&star, &mut o, &r));
        assert_eq!(count_low_degree_components(&star, &mut o, &r).unwrap(), 3);
        let high = rec(1, 2, &[0], 2, 1);
        assert!(!low_degree_check(&star, &mut o, &high));
        assert!(count_low_degree_components(&star, &mut o, &high).is_err());

        let p3 = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        let mut o = FailureOracle::preprocess(&p3).unwrap();
        assert!(!low_degree_check(&p3, &mut o, &rec(0, 4, &[1], 2, 1)));

        // double star: centers 0 and 1, leaves 2..5 on 0 and 5..8 on 1
        let ds = build_graph(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]).unwrap();
        let mut o = FailureOracle::preprocess(&ds).unwrap();
        let r = rec(2, 4, &[0], 5, 1);
        assert!(low_degree_check(&ds, &mut o, &r));
        assert_eq!(count_low_degree_components(&ds, &mut o, &r).unwrap(), 4);
    }

    #[test]
    fn high_degree_empty() {
        let star = build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut rng = rand::thread_rng();
        assert!(high_degree_extract(&star, &[], &mut rng, &SamplingConfig::DESK).is_empty());
    }
}
