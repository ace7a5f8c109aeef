//! Unit-capacity vertex-split max flow between two vertices.
//!
//! Vertex `v` becomes `in(v) = 2v` and `out(v) = 2v + 1` joined by a unit arc;
//! every adjacency slot `u → v` is an arc `out(u) → in(v)`.
//!
//! Augmenting paths come from a bidirectional search that grows the smaller
//! frontier, so a pair whose paths stay near both ends never touches the rest
//! of the graph. All per-pair state is epoch stamped, which lets one instance
//! serve many pairs without O(n) resets.

use crate::graph::{Graph, VertexSet};
use crate::stamp::Stamps;

#[derive(Clone, Copy, Debug)]
enum Arc {
    Fwd(usize),
    Int(usize),
    RevInt(usize),
    RevFwd(usize),
}

pub(crate) struct SplitFlow<'g> {
    g: &'g Graph,
    s: usize,
    t: usize,
    flow: Stamps,
    internal: Stamps,
    value: usize,
    seen_fwd: Stamps,
    seen_bwd: Stamps,
    /// Forward side: predecessor and the arc into the node.
    prev: Vec<(usize, Arc)>,
    /// Backward side: successor and the arc out of the node.
    next: Vec<(usize, Arc)>,
    queue_fwd: Vec<usize>,
    queue_bwd: Vec<usize>,
}

impl<'g> SplitFlow<'g> {
    pub fn new(g: &'g Graph, s: usize, t: usize) -> Self {
        let nodes = 2 * g.n();
        let mut f = SplitFlow {
            g,
            s,
            t,
            flow: Stamps::new(g.slot_count()),
            internal: Stamps::new(g.n()),
            value: 0,
            seen_fwd: Stamps::new(nodes),
            seen_bwd: Stamps::new(nodes),
            prev: vec![(0, Arc::Int(0)); nodes],
            next: vec![(0, Arc::Int(0)); nodes],
            queue_fwd: Vec::new(),
            queue_bwd: Vec::new(),
        };
        f.reset(s, t);
        f
    }

    /// Zero flow between a new pair.
    pub fn reset(&mut self, s: usize, t: usize) {
        self.s = s;
        self.t = t;
        self.flow.clear();
        self.internal.clear();
        self.value = 0;
    }

    pub fn value(&self) -> usize {
        self.value
    }

    /// Augment until the flow reaches `limit` or no augmenting path is left.
    pub fn run(&mut self, limit: usize) -> usize {
        while self.value < limit && self.augment() {
            self.value += 1;
        }
        self.value
    }

    /// Residual arcs leaving `node`.
    fn out_arcs(&self, node: usize, mut f: impl FnMut(usize, Arc)) {
        let (g, s) = (self.g, self.s);
        let v = node / 2;
        if node % 2 == 1 {
            for slot in g.slots(v) {
                let w = g.target(slot);
                if w != s && !self.flow.get(slot) {
                    f(2 * w, Arc::Fwd(slot));
                }
            }
            if v != s && self.internal.get(v) {
                f(2 * v, Arc::RevInt(v));
            }
        } else {
            if !self.internal.get(v) {
                f(2 * v + 1, Arc::Int(v));
            }
            for slot in g.slots(v) {
                let tw = g.twin(slot);
                if self.flow.get(tw) {
                    f(2 * g.target(slot) + 1, Arc::RevFwd(tw));
                }
            }
        }
    }

    /// Residual arcs entering `node`, mirroring [`Self::out_arcs`].
    fn in_arcs(&self, node: usize, mut f: impl FnMut(usize, Arc)) {
        let (g, s) = (self.g, self.s);
        let v = node / 2;
        if node % 2 == 0 {
            if v == s {
                return;
            }
            for slot in g.slots(v) {
                let tw = g.twin(slot);
                if !self.flow.get(tw) {
                    f(2 * g.target(slot) + 1, Arc::Fwd(tw));
                }
            }
            if self.internal.get(v) {
                f(2 * v + 1, Arc::RevInt(v));
            }
        } else {
            if !self.internal.get(v) {
                f(2 * v, Arc::Int(v));
            }
            for slot in g.slots(v) {
                if self.flow.get(slot) {
                    f(2 * g.target(slot), Arc::RevFwd(slot));
                }
            }
        }
    }

    fn apply(&mut self, arc: Arc) {
        match arc {
            Arc::Fwd(slot) => self.flow.set(slot),
            Arc::Int(v) => self.internal.set(v),
            Arc::RevInt(v) => self.internal.unset(v),
            Arc::RevFwd(slot) => self.flow.unset(slot),
        }
    }

    fn augment(&mut self) -> bool {
        let src = 2 * self.s + 1;
        let dst = 2 * self.t;
        self.seen_fwd.clear();
        self.seen_bwd.clear();
        self.seen_fwd.set(src);
        self.seen_bwd.set(dst);
        let mut qf = std::mem::take(&mut self.queue_fwd);
        let mut qb = std::mem::take(&mut self.queue_bwd);
        qf.clear();
        qb.clear();
        qf.push(src);
        qb.push(dst);
        let (mut hf, mut hb) = (0, 0);
        let mut meet = None;
        let mut found = Vec::new();
        while meet.is_none() && hf < qf.len() && hb < qb.len() {
            found.clear();
            if qf.len() - hf <= qb.len() - hb {
                let node = qf[hf];
                hf += 1;
                self.out_arcs(node, |to, arc| found.push((to, arc)));
                for &(to, arc) in &found {
                    if self.seen_bwd.get(to) {
                        meet = Some((node, arc, to));
                        break;
                    }
                    if self.seen_fwd.insert(to) {
                        self.prev[to] = (node, arc);
                        qf.push(to);
                    }
                }
            } else {
                let node = qb[hb];
                hb += 1;
                self.in_arcs(node, |from, arc| found.push((from, arc)));
                for &(from, arc) in &found {
                    if self.seen_fwd.get(from) {
                        meet = Some((from, arc, node));
                        break;
                    }
                    if self.seen_bwd.insert(from) {
                        self.next[from] = (node, arc);
                        qb.push(from);
                    }
                }
            }
        }
        self.queue_fwd = qf;
        self.queue_bwd = qb;
        let Some((a, arc, b)) = meet else { return false };
        self.apply(arc);
        let mut node = a;
        while node != src {
            let (p, arc) = self.prev[node];
            self.apply(arc);
            node = p;
        }
        let mut node = b;
        while node != dst {
            let (nx, arc) = self.next[node];
            self.apply(arc);
            node = nx;
        }
        true
    }

    /// Decompose the current flow into vertex paths from `s` to `t`.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let g = self.g;
        let mut out = Vec::with_capacity(self.value);
        for slot in g.slots(self.s) {
            if !self.flow.get(slot) {
                continue;
            }
            let mut path = vec![self.s];
            let mut w = g.target(slot);
            path.push(w);
            while w != self.t {
                debug_assert!(self.internal.get(w), "flow enters {w} without passing through it");
                let next = g.slots(w).find(|&sl| self.flow.get(sl)).expect("conservation");
                w = g.target(next);
                path.push(w);
            }
            out.push(path);
        }
        out
    }

    /// Minimum vertex cut for a maximum flow between non-adjacent endpoints.
    ///
    /// Reachability treats edge arcs as uncapacitated so that only vertex
    /// arcs can be cut.
    pub fn min_cut(&self) -> VertexSet {
        let g = self.g;
        let mut seen = vec![false; 2 * g.n()];
        let src = 2 * self.s + 1;
        seen[src] = true;
        let mut stack = vec![src];
        while let Some(node) = stack.pop() {
            let v = node / 2;
            let mut push = |to: usize, stack: &mut Vec<usize>| {
                if !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            };
            if node % 2 == 1 {
                for &w in g.neighbors(v) {
                    if w != self.s {
                        push(2 * w, &mut stack);
                    }
                }
                if v != self.s && self.internal.get(v) {
                    push(2 * v, &mut stack);
                }
            } else {
                if v == self.t {
                    continue;
                }
                if !self.internal.get(v) {
                    push(2 * v + 1, &mut stack);
                }
                for slot in g.slots(v) {
                    if self.flow.get(g.twin(slot)) {
                        push(2 * g.target(slot) + 1, &mut stack);
                    }
                }
            }
        }
        VertexSet::new((0..g.n()).filter(|&v| v != self.s && v != self.t && seen[2 * v] && !seen[2 * v + 1]))
    }
}
