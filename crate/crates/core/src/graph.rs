//! Immutable simple undirected graphs and the basic quantities built on them.

use std::collections::HashSet;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as sorted CSR. Every adjacency entry is a *slot*;
/// `twin(s)` is the slot of the same edge seen from the other endpoint.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    twin: Vec<usize>,
    slot_edge: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Slot range of `v`; `target(s)` for `s` in the range walks `neighbors(v)`.
    pub fn slots(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn slot_count(&self) -> usize {
        self.targets.len()
    }

    pub fn target(&self, slot: usize) -> usize {
        self.targets[slot]
    }

    pub fn twin(&self, slot: usize) -> usize {
        self.twin[slot]
    }

    pub fn edge_of_slot(&self, slot: usize) -> usize {
        self.slot_edge[slot]
    }

    /// Edges in insertion order, each as (min, max).
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.m() * 2 == self.n * self.n.saturating_sub(1)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || components(self, &VertexSet::empty()).map(|c| c.len() == 1).unwrap_or(false)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Serialize in the text format accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Build a graph, rejecting self-loops, repeated pairs and out-of-range ids.
pub fn build_graph(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
    let mut seen = HashSet::with_capacity(edge_list.len());
    let mut edges = Vec::with_capacity(edge_list.len());
    let mut deg = vec![0usize; n];
    for &(u, v) in edge_list {
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(Error::DuplicateEdge(e.0, e.1));
        }
        deg[u] += 1;
        deg[v] += 1;
        edges.push(e);
    }
    let mut offsets = vec![0usize; n + 1];
    for v in 0..n {
        offsets[v + 1] = offsets[v] + deg[v];
    }
    let mut pairs: Vec<(usize, usize, usize)> = Vec::with_capacity(2 * edges.len());
    for (id, &(u, v)) in edges.iter().enumerate() {
        pairs.push((u, v, id));
        pairs.push((v, u, id));
    }
    pairs.sort_unstable();
    let targets: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    let slot_edge: Vec<usize> = pairs.iter().map(|p| p.2).collect();
    let mut twin = vec![0usize; pairs.len()];
    for (s, &(u, v, _)) in pairs.iter().enumerate() {
        let lo = offsets[v];
        let t = lo + targets[lo..offsets[v + 1]].binary_search(&u).expect("symmetric adjacency");
        twin[s] = t;
    }
    Ok(Graph { n, offsets, targets, twin, slot_edge, edges })
}

/// Parse "n m" followed by m lines "u v". `#` lines and blank lines are skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?;
        if nums.len() != 2 {
            return Err(Error::Parse { line: i + 1, msg: format!("expected two integers, got {}", nums.len()) });
        }
        match header {
            None => header = Some((nums[0], nums[1])),
            Some(_) => edges.push((nums[0], nums[1])),
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse { line: 0, msg: format!("header declares {m} edges, found {}", edges.len()) });
    }
    build_graph(n, &edges)
}

/// A set of vertices kept sorted and deduplicated; equality is canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn new<I: IntoIterator<Item = usize>>(items: I) -> Self {
        let mut v: Vec<usize> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// Boolean membership table of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            m[v] = true;
        }
        m
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Components of `G ∖ S`: the largest by volume, and the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub largest: VertexSet,
    pub rest: Vec<VertexSet>,
    pub vol_rest: usize,
}

fn check_set(g: &Graph, q: &VertexSet) -> Result<()> {
    match q.as_slice().last() {
        Some(&v) => g.check(v),
        None => Ok(()),
    }
}

/// Number of edges with at least one endpoint in `q`.
pub fn volume(g: &Graph, q: &VertexSet) -> Result<usize> {
    check_set(g, q)?;
    let inside = q.mask(g.n());
    Ok(volume_masked(g, q.as_slice(), &inside))
}

pub(crate) fn volume_masked(g: &Graph, members: &[usize], inside: &[bool]) -> usize {
    let mut vol = 0;
    for &v in members {
        for &w in g.neighbors(v) {
            if !inside[w] || w > v {
                vol += 1;
            }
        }
    }
    vol
}

/// Connected components of `G ∖ removed`, ordered by smallest vertex.
pub fn components(g: &Graph, removed: &VertexSet) -> Result<Vec<VertexSet>> {
    check_set(g, removed)?;
    let mut gone = removed.mask(g.n());
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if gone[s] {
            continue;
        }
        gone[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if !gone[w] {
                    gone[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(VertexSet::new(comp));
    }
    Ok(out)
}

/// Number of components of `G ∖ removed` (no allocation of the sets).
pub fn component_count(g: &Graph, removed: &[usize]) -> usize {
    let mut gone = vec![false; g.n()];
    for &v in removed {
        gone[v] = true;
    }
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if gone[s] {
            continue;
        }
        count += 1;
        gone[s] = true;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !gone[w] {
                    gone[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Split `G ∖ S` into its largest component and the rest.
///
/// Ties in volume go to the component with the smallest minimum vertex.
pub fn partition_of(g: &Graph, s: &VertexSet) -> Result<Partition> {
    let comps = components(g, s)?;
    if comps.len() < 2 {
        return Err(Error::NotASeparator);
    }
    let vols: Vec<usize> = comps.iter().map(|c| volume(g, c).expect("in range")).collect();
    let mut best = 0;
    for i in 1..comps.len() {
        if vols[i] > vols[best] {
            best = i;
        }
    }
    let mut rest = Vec::with_capacity(comps.len() - 1);
    let mut vol_rest = 0;
    let mut largest = VertexSet::empty();
    for (i, c) in comps.into_iter().enumerate() {
        if i == best {
            largest = c;
        } else {
            vol_rest += vols[i];
            rest.push(c);
        }
    }
    Ok(Partition { largest, rest, vol_rest })
}

/// A uniform edge with a uniformly random orientation.
pub fn sample_edge<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<(usize, usize)> {
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (u, v) = g.edges[rng.gen_range(0..g.m())];
    Ok(if rng.gen::<bool>() { (u, v) } else { (v, u) })
}

/// ⌈log₂ max(n, 2)⌉, the logarithm used by every sampling loop.
pub fn log_n(n: usize) -> usize {
    let n = n.max(2);
    (usize::BITS - (n - 1).leading_zeros()) as usize
}

/// Number of edges with both endpoints in `u`.
pub fn inner_edges(g: &Graph, u: &[usize]) -> usize {
    let mut c = 0;
    for (i, &a) in u.iter().enumerate() {
        for &b in &u[i + 1..] {
            if g.has_edge(a, b) {
                c += 1;
            }
        }
    }
    c
}
