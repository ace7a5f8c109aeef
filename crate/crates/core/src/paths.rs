//! Openly-disjoint path systems and per-vertex position lookup.

use crate::error::{Error, Result};
use crate::flow::SplitFlow;
use crate::graph::{Graph, VertexSet};

/// `k` simple paths leaving a common source that meet only at the source
/// and, possibly, at shared final vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    source: usize,
    paths: Vec<Vec<usize>>,
}

impl PathSystem {
    /// Validate and wrap.
    pub fn new(g: &Graph, source: usize, paths: Vec<Vec<usize>>) -> Result<Self> {
        let ps = PathSystem { source, paths };
        ps.validate(g)?;
        Ok(ps)
    }

    pub(crate) fn new_unchecked(source: usize, paths: Vec<Vec<usize>>) -> Self {
        PathSystem { source, paths }
    }

    /// Refill in place, keeping the path buffers.
    pub(crate) fn refill(&mut self, source: usize) -> &mut Vec<Vec<usize>> {
        self.source = source;
        &mut self.paths
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn k(&self) -> usize {
        self.paths.len()
    }

    /// Sum of edge counts over all paths.
    pub fn total_length(&self) -> usize {
        self.paths.iter().map(|p| p.len() - 1).sum()
    }

    /// Last vertex of every path, in path order.
    pub fn far_ends(&self) -> Vec<usize> {
        self.paths.iter().map(|p| *p.last().expect("nonempty")).collect()
    }

    /// Every (path, distance) position of `v`.
    pub fn positions(&self, v: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, p) in self.paths.iter().enumerate() {
            if let Some(d) = p.iter().position(|&w| w == v) {
                out.push((i, d));
            }
        }
        out
    }

    /// Interpret `set` as one vertex per path, if it is one.
    pub fn tuple_of(&self, g: &Graph, set: &VertexSet) -> Option<Candidate> {
        let mut idx = PathIndex::new(g.n());
        idx.load(self);
        as_tuple(&idx, set.as_slice(), None)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedTuple(msg));
        let n = g.n();
        if self.source >= n {
            return bad(format!("source {} out of range", self.source));
        }
        if self.paths.is_empty() {
            return bad("no paths".into());
        }
        // (vertex, is_final); sorting groups the repeats
        let mut roles: Vec<(usize, bool)> = Vec::with_capacity(self.total_length());
        for (i, p) in self.paths.iter().enumerate() {
            if p.len() < 2 {
                return bad(format!("path {i} has no edges"));
            }
            if p[0] != self.source {
                return bad(format!("path {i} does not start at the source"));
            }
            for w in p.windows(2) {
                if w[1] >= n || !g.has_edge(w[0], w[1]) {
                    return bad(format!("path {i} uses a non-edge ({}, {})", w[0], w[1]));
                }
            }
            let last = p.len() - 1;
            for (d, &v) in p.iter().enumerate().skip(1) {
                if v == self.source {
                    return bad(format!("path {i} revisits the source"));
                }
                roles.push((v, d == last));
            }
        }
        roles.sort_unstable();
        // only far ends may repeat
        if let Some(w) = roles.windows(2).find(|w| w[0].0 == w[1].0 && !(w[0].1 && w[1].1)) {
            return bad(format!("vertex {} is shared between paths", w[0].0));
        }
        Ok(())
    }
}

/// Openly-disjoint x→y paths by unit-capacity vertex-split max flow.
pub fn openly_disjoint_paths(g: &Graph, x: usize, y: usize, k: usize) -> Result<PathSystem> {
    for v in [x, y] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if x == y {
        return Err(Error::PreconditionViolated("endpoints coincide".into()));
    }
    let mut f = SplitFlow::new(g, x, y);
    let found = f.run(k);
    if found < k {
        return Err(Error::CutSmallerThanK { x, y, found, needed: k });
    }
    let ps = PathSystem::new_unchecked(x, f.paths());
    debug_assert!(ps.validate(g).is_ok());
    Ok(ps)
}

/// A k-tuple: exactly one vertex on each path, stored in path order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub vertices: Vec<usize>,
    pub deltas: Vec<usize>,
    pub source_bridge: Option<usize>,
}

impl Candidate {
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::new(self.vertices.iter().copied())
    }
}

const NONE: u32 = u32::MAX;

/// Dense position table for one path system at a time; reloading costs
/// O(total length), not O(n).
pub(crate) struct PathIndex {
    stamp: Vec<u32>,
    epoch: u32,
    path: Vec<u32>,
    delta: Vec<u32>,
    multi: Vec<u32>,
    /// Position lists of multi-path vertices; only the first `used` are live.
    lists: Vec<Vec<(usize, usize)>>,
    used: usize,
    lens: Vec<usize>,
    /// Concatenated paths; path p starts at `starts[p]`.
    flat: Vec<usize>,
    starts: Vec<usize>,
}

impl PathIndex {
    pub fn new(n: usize) -> Self {
        PathIndex {
            stamp: vec![0; n],
            epoch: 0,
            path: vec![0; n],
            delta: vec![0; n],
            multi: vec![NONE; n],
            lists: Vec::new(),
            used: 0,
            lens: Vec::new(),
            flat: Vec::new(),
            starts: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.lens.len()
    }

    pub fn load(&mut self, ps: &PathSystem) {
        if self.epoch == u32::MAX {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 0;
        }
        self.epoch += 1;
        self.used = 0;
        self.lens.clear();
        self.flat.clear();
        self.starts.clear();
        let x = ps.source;
        self.stamp[x] = self.epoch;
        self.multi[x] = 0;
        let src = self.fresh_list();
        src.extend((0..ps.k()).map(|p| (p, 0)));
        for (p, path) in ps.paths.iter().enumerate() {
            self.lens.push(path.len() - 1);
            self.starts.push(self.flat.len());
            self.flat.extend_from_slice(path);
            for (d, &v) in path.iter().enumerate().skip(1) {
                if self.stamp[v] != self.epoch {
                    self.stamp[v] = self.epoch;
                    self.path[v] = p as u32;
                    self.delta[v] = d as u32;
                    self.multi[v] = NONE;
                } else if self.multi[v] == NONE {
                    let first = (self.path[v] as usize, self.delta[v] as usize);
                    self.multi[v] = self.used as u32;
                    self.fresh_list().extend([first, (p, d)]);
                } else {
                    self.lists[self.multi[v] as usize].push((p, d));
                }
            }
        }
    }

    fn fresh_list(&mut self) -> &mut Vec<(usize, usize)> {
        if self.used == self.lists.len() {
            self.lists.push(Vec::new());
        }
        self.used += 1;
        let l = &mut self.lists[self.used - 1];
        l.clear();
        l
    }

    #[inline]
    pub fn on_path(&self, v: usize) -> bool {
        self.stamp[v] == self.epoch
    }

    /// Position of a vertex lying on exactly one path.
    #[inline]
    pub fn single(&self, v: usize) -> Option<(usize, usize)> {
        if self.stamp[v] == self.epoch && self.multi[v] == NONE {
            Some((self.path[v] as usize, self.delta[v] as usize))
        } else {
            None
        }
    }

    #[inline]
    pub fn for_each(&self, v: usize, mut f: impl FnMut(usize, usize)) {
        if self.stamp[v] != self.epoch {
            return;
        }
        if self.multi[v] == NONE {
            f(self.path[v] as usize, self.delta[v] as usize);
        } else {
            for &(p, d) in &self.lists[self.multi[v] as usize] {
                f(p, d);
            }
        }
    }

    /// Whether (u, v) is consecutive on some path.
    pub fn is_path_edge(&self, u: usize, v: usize) -> bool {
        let next_to = |(p, d): (usize, usize), w: usize| {
            let path = &self.flat[self.starts[p]..self.starts[p] + self.lens[p] + 1];
            path[d - 1] == w || path.get(d + 1) == Some(&w)
        };
        if let Some(pos) = self.single(u) {
            return next_to(pos, v);
        }
        if let Some(pos) = self.single(v) {
            return next_to(pos, u);
        }
        let mut hit = false;
        self.for_each(u, |pu, du| {
            self.for_each(v, |pv, dv| {
                if pu == pv && du.abs_diff(dv) == 1 {
                    hit = true;
                }
            })
        });
        hit
    }
}

/// One interior vertex per path of `idx`, or `None`.
///
/// Far ends are excluded: they lie on the side opposite the source.
pub(crate) fn as_tuple(idx: &PathIndex, atts: &[usize], source_bridge: Option<usize>) -> Option<Candidate> {
    let k = idx.k();
    if atts.len() != k {
        return None;
    }
    let mut vertices = vec![usize::MAX; k];
    let mut deltas = vec![0; k];
    for &a in atts {
        let (p, d) = idx.single(a)?;
        if vertices[p] != usize::MAX || d == idx.lens[p] {
            return None;
        }
        vertices[p] = a;
        deltas[p] = d;
    }
    Some(Candidate { vertices, deltas, source_bridge })
}
