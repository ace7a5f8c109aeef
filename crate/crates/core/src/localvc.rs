//! Local construction of k openly disjoint paths from a seed.
//!
//! Each vertex v is split into an in node `2v` and an out node `2v + 1` joined
//! by a unit arc; every edge gives a unit arc out(u) → in(w) in both
//! directions. The seed is the out node of x. Each round runs a DFS in the
//! residual graph until it has traversed `k·ν` edge arcs, picks the head of a
//! uniformly random traversed edge arc, and augments along the tree path.

use rand::Rng;

use crate::graph::Graph;
use crate::paths::PathSystem;
use crate::stamp::Stamps;

#[derive(Clone, Copy, Debug)]
enum Step {
    /// Forward edge arc along this slot.
    Fwd(usize),
    /// Cancelling flow on this slot.
    Back(usize),
    /// in(v) → out(v).
    Int,
    /// out(v) → in(v), cancelling.
    BackInt,
}

/// Reusable scratch for [`local_vc`] on one graph.
pub struct LocalVc {
    slot_flow: Stamps,
    internal: Stamps,
    /// Slot carrying the flow into each used vertex; checked against
    /// `slot_flow` before use, so stale entries are harmless.
    enter: Vec<usize>,
    visited: Stamps,
    parent: Vec<(usize, Step)>,
    cursor: Vec<usize>,
    stack: Vec<usize>,
    heads: Vec<usize>,
}

impl LocalVc {
    pub fn new(g: &Graph) -> Self {
        let nodes = 2 * g.n();
        LocalVc {
            slot_flow: Stamps::new(g.slot_count()),
            internal: Stamps::new(g.n()),
            enter: vec![0; g.n()],
            visited: Stamps::new(nodes),
            parent: vec![(0, Step::Int); nodes],
            cursor: vec![0; nodes],
            stack: Vec::new(),
            heads: Vec::new(),
        }
    }

    /// Next residual arc out of `a` as (head, step, is_edge_arc).
    fn next_arc(&mut self, g: &Graph, x: usize, a: usize) -> Option<(usize, Step, bool)> {
        let v = a >> 1;
        let slots = g.slots(v);
        let deg = slots.len();
        loop {
            let c = self.cursor[a];
            if c > deg {
                return None;
            }
            self.cursor[a] += 1;
            if a & 1 == 1 {
                if c < deg {
                    let s = slots.start + c;
                    let w = g.target(s);
                    if w != x && !self.slot_flow.get(s) {
                        return Some((2 * w, Step::Fwd(s), true));
                    }
                } else if v != x && self.internal.get(v) {
                    return Some((a - 1, Step::BackInt, false));
                }
            } else {
                // flow enters a vertex only when it passes through it, and
                // then along exactly one slot
                self.cursor[a] = deg + 1;
                if c == 0 && !self.internal.get(v) {
                    return Some((a + 1, Step::Int, false));
                }
                let e = self.enter[v];
                if self.internal.get(v) && self.slot_flow.get(e) {
                    return Some((2 * g.target(g.twin(e)) + 1, Step::Back(e), true));
                }
                return None;
            }
        }
    }

    fn apply(&mut self, g: &Graph, node: usize, step: Step) {
        match step {
            Step::Fwd(s) => {
                self.slot_flow.set(s);
                self.enter[g.target(s)] = s;
            }
            Step::Back(s) => self.slot_flow.unset(s),
            Step::Int => self.internal.set(node >> 1),
            Step::BackInt => self.internal.unset(node >> 1),
        }
    }

    /// One augmenting round; `false` when no traversed arc has a usable head.
    fn round<R: Rng + ?Sized>(&mut self, g: &Graph, x: usize, budget: usize, rng: &mut R) -> bool {
        let root = 2 * x + 1;
        self.visited.clear();
        self.visited.set(root);
        self.cursor[root] = 0;
        self.stack.clear();
        self.stack.push(root);
        self.heads.clear();
        let mut explored = 0;
        while let Some(&a) = self.stack.last() {
            let Some((head, step, is_edge)) = self.next_arc(g, x, a) else {
                self.stack.pop();
                continue;
            };
            let w = head >> 1;
            if is_edge {
                explored += 1;
                // in(w) can only end a path while w is unused
                if w != x && (head & 1 == 1 || !self.internal.get(w)) {
                    self.heads.push(head);
                }
            }
            if self.visited.insert(head) {
                self.parent[head] = (a, step);
                self.cursor[head] = 0;
                self.stack.push(head);
            }
            if explored >= budget {
                break;
            }
        }
        if self.heads.is_empty() {
            return false;
        }
        let end = self.heads[rng.gen_range(0..self.heads.len())];
        if end & 1 == 0 {
            self.internal.set(end >> 1);
        }
        let mut b = end;
        while b != root {
            let (a, step) = self.parent[b];
            self.apply(g, b, step);
            b = a;
        }
        true
    }

    /// Up to k rounds, then decompose the flow into paths.
    pub fn run<R: Rng + ?Sized>(&mut self, g: &Graph, x: usize, nu: usize, k: usize, rng: &mut R) -> Option<PathSystem> {
        let mut ps = PathSystem::new_unchecked(x, Vec::new());
        self.run_into(g, x, nu, k, rng, &mut ps).then_some(ps)
    }

    /// As [`LocalVc::run`], reusing the buffers of `out`; its contents are
    /// meaningful only on `true`.
    pub fn run_into<R: Rng + ?Sized>(
        &mut self,
        g: &Graph,
        x: usize,
        nu: usize,
        k: usize,
        rng: &mut R,
        out: &mut PathSystem,
    ) -> bool {
        if k == 0 || nu == 0 || x >= g.n() {
            return false;
        }
        self.slot_flow.clear();
        self.internal.clear();
        for _ in 0..k {
            if !self.round(g, x, k * nu, rng) {
                return false;
            }
        }
        let cap = k * k * nu;
        let mut total = 0;
        let paths = out.refill(x);
        paths.resize_with(k, Vec::new);
        let mut found = 0;
        for s in g.slots(x) {
            if !self.slot_flow.get(s) {
                continue;
            }
            if found == k {
                return false;
            }
            let path = &mut paths[found];
            found += 1;
            path.clear();
            path.push(x);
            let mut cur = g.target(s);
            loop {
                path.push(cur);
                total += 1;
                if total > cap {
                    return false;
                }
                match g.slots(cur).find(|&s2| self.slot_flow.get(s2)) {
                    Some(s2) => cur = g.target(s2),
                    None => break,
                }
            }
        }
        if found != k {
            return false;
        }
        debug_assert!(out.validate(g).is_ok(), "decomposition produced a bad path system");
        true
    }
}

/// k openly disjoint paths from `x` of total length at most k²ν, or `None`.
///
/// When a cut with x on a small side of volume in (ν/2, ν] exists, all far
/// ends land on the large side with probability at least 1/4.
pub fn local_vc<R: Rng + ?Sized>(g: &Graph, x: usize, nu: usize, k: usize, rng: &mut R) -> Option<PathSystem> {
    LocalVc::new(g).run(g, x, nu, k, rng)
}
