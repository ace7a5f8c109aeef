//! Connectivity under vertex failures, plus the DFS-tree structure used to
//! count components.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Depth-first tree rooted at vertex 0, neighbors taken in ascending order.
#[derive(Clone, Debug)]
pub struct DfsTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub pre: Vec<usize>,
    pub post: Vec<usize>,
    pub depth: Vec<usize>,
    /// Children of each vertex in increasing preorder.
    children: Vec<Vec<usize>>,
}

impl DfsTree {
    /// Builds the tree; the graph must be connected.
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut t = DfsTree {
            root: 0,
            parent: vec![None; n],
            pre: vec![usize::MAX; n],
            post: vec![0; n],
            depth: vec![0; n],
            children: vec![Vec::new(); n],
        };
        let (mut pre, mut post) = (0, 0);
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        t.pre[0] = pre;
        pre += 1;
        while let Some(top) = stack.last_mut() {
            let (v, i) = *top;
            let nb = g.neighbors(v);
            if i == nb.len() {
                t.post[v] = post;
                post += 1;
                stack.pop();
                continue;
            }
            top.1 += 1;
            let w = nb[i];
            if t.pre[w] == usize::MAX {
                t.pre[w] = pre;
                pre += 1;
                t.parent[w] = Some(v);
                t.depth[w] = t.depth[v] + 1;
                t.children[v].push(w);
                stack.push((w, 0));
            }
        }
        t
    }

    /// Ancestor-or-self.
    #[inline]
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        self.pre[a] <= self.pre[b] && self.post[b] <= self.post[a]
    }

    /// Whether every edge joins an ancestor and a descendant.
    pub fn edges_are_vertical(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.is_ancestor(u, v) || self.is_ancestor(v, u))
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }
}

/// Exact connectivity in `G ∖ F`, relabelled by BFS on every update.
pub struct FailureOracle<'g> {
    g: &'g Graph,
    dfs: DfsTree,
    failed: VertexSet,
    label: Vec<u32>,
    queue: Vec<usize>,
}

const FAILED: u32 = u32::MAX;

impl<'g> FailureOracle<'g> {
    pub fn preprocess(g: &'g Graph) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let dfs = DfsTree::new(g);
        assert!(dfs.edges_are_vertical(g), "non-tree edge between unrelated vertices");
        Ok(FailureOracle { g, dfs, failed: VertexSet::empty(), label: vec![0; g.n()], queue: Vec::new() })
    }

    pub fn dfs(&self) -> &DfsTree {
        &self.dfs
    }

    pub fn failures(&self) -> &VertexSet {
        &self.failed
    }

    pub fn update(&mut self, f: &VertexSet) {
        let n = self.g.n();
        self.label.iter_mut().for_each(|l| *l = u32::MAX - 1);
        for v in f.iter() {
            self.label[v] = FAILED;
        }
        let mut next = 0u32;
        for s in 0..n {
            if self.label[s] != u32::MAX - 1 {
                continue;
            }
            self.label[s] = next;
            self.queue.clear();
            self.queue.push(s);
            while let Some(u) = self.queue.pop() {
                for &w in self.g.neighbors(u) {
                    if self.label[w] == u32::MAX - 1 {
                        self.label[w] = next;
                        self.queue.push(w);
                    }
                }
            }
            next += 1;
        }
        self.failed = f.clone();
    }

    pub fn connected(&self, u: usize, v: usize) -> Result<bool> {
        for w in [u, v] {
            if self.label[w] == FAILED {
                return Err(Error::QueriedFailedVertex(w));
            }
        }
        Ok(self.label[u] == self.label[v])
    }

    /// Root of the component of `T ∖ U` containing `y`.
    pub fn component_root(&self, y: usize, u: &VertexSet) -> Result<usize> {
        if u.contains(y) {
            return Err(Error::QueriedFailedVertex(y));
        }
        let t = &self.dfs;
        let deepest = u.iter().filter(|&a| t.is_ancestor(a, y)).max_by_key(|&a| t.depth[a]);
        let Some(a) = deepest else { return Ok(t.root) };
        let ch = t.children(a);
        let i = ch.partition_point(|&c| t.pre[c] <= t.pre[y]);
        Ok(ch[i - 1])
    }

    /// One vertex (the root) of each component of `T ∖ U` whose root is an
    /// ancestor of a vertex of `U`, ascending.
    pub fn internal_representatives(&self, u: &VertexSet) -> Vec<usize> {
        let mut reps: Vec<usize> = u
            .iter()
            .filter_map(|a| self.dfs.parent[a])
            .filter(|&p| !u.contains(p))
            .map(|p| self.component_root(p, u).expect("parent not failed"))
            .collect();
        reps.sort_unstable();
        reps.dedup();
        reps
    }
}
