//! Deterministic graph generators.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};

fn bad<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::BadParams(msg.into()))
}

fn clique_edges(vs: std::ops::Range<usize>, out: &mut Vec<(usize, usize)>) {
    for a in vs.clone() {
        for b in a + 1..vs.end {
            out.push((a, b));
        }
    }
}

/// Center 0 with leaves `1..=d`.
pub fn star(d: usize) -> Result<Graph> {
    if d == 0 {
        return bad("star needs a leaf");
    }
    build_graph(d + 1, &(1..=d).map(|i| (0, i)).collect::<Vec<_>>())
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return bad("empty path");
    }
    build_graph(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return bad("a cycle needs three vertices");
    }
    build_graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return bad("empty clique");
    }
    let mut e = Vec::new();
    clique_edges(0..n, &mut e);
    build_graph(n, &e)
}

/// Sides `0..a` and `a..a + b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return bad("both sides must be nonempty");
    }
    let e: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    build_graph(a + b, &e)
}

/// Centers 0 and 1 joined by an edge; 0 gets `d1` leaves, then 1 gets `d2`.
pub fn double_star(d1: usize, d2: usize) -> Result<Graph> {
    let mut e = vec![(0, 1)];
    e.extend((0..d1).map(|i| (0, 2 + i)));
    e.extend((0..d2).map(|i| (1, 2 + d1 + i)));
    build_graph(2 + d1 + d2, &e)
}

/// A 3-connected graph on ten vertices with ten 4-shredders.
///
/// Two five-vertex clusters `0..5` and `5..10` joined by the edges 0–5,
/// 1–6 and 2–7. Each of the eight ways of picking one endpoint per joining
/// edge extends to a 4-shredder.
pub fn dumbbell() -> Graph {
    const EDGES: [(usize, usize); 20] = [
        (0, 2),
        (0, 3),
        (0, 4),
        (0, 5),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 6),
        (2, 3),
        (2, 4),
        (2, 7),
        (5, 6),
        (5, 7),
        (5, 8),
        (5, 9),
        (6, 7),
        (6, 8),
        (6, 9),
        (7, 8),
        (7, 9),
    ];
    build_graph(10, &EDGES).expect("fixed edge list")
}

fn planted(t: usize, k: usize, r: usize, d: usize) -> Result<Graph> {
    if t == 0 || k == 0 || r == 0 {
        return bad("clique, shredder and singleton counts must be positive");
    }
    let mut e = Vec::new();
    clique_edges(0..t, &mut e);
    clique_edges(t..t + k, &mut e);
    for s in t..t + k {
        e.extend((0..d).map(|c| (c, s)));
        e.extend((t + k..t + k + r).map(|q| (s, q)));
    }
    build_graph(t + k + r, &e)
}

/// Clique `0..t`, shredder `t..t+k` joined to everything in the clique and to
/// each other, then `r` singletons each joined to the whole shredder.
pub fn unbalanced(t: usize, k: usize, r: usize) -> Result<Graph> {
    planted(t, k, r, t)
}

/// As [`unbalanced`], but the shredder only sees clique vertices `0..d`.
pub fn lowdeg(t: usize, k: usize, r: usize, d: usize) -> Result<Graph> {
    if d < k || d > t {
        return bad(format!("need k <= d <= t, got k={k} d={d} t={t}"));
    }
    planted(t, k, r, d)
}

/// A random spanning tree plus each other pair independently with
/// probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 || !(0.0..=1.0).contains(&p) {
        return bad("need n >= 1 and 0 <= p <= 1");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tree = vec![false; n * n];
    let mut e = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        tree[u * n + v] = true;
        e.push((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !tree[u * n + v] && rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    build_graph(n, &e)
}

/// `K_{k+1}`, then each further vertex joined to `k` random earlier ones;
/// exactly k-connected.
pub fn random_k_connected(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k == 0 || n < k + 2 {
        return bad("need k >= 1 and n >= k + 2");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Vec::new();
    clique_edges(0..k + 1, &mut e);
    for v in k + 1..n {
        e.extend(sample(&mut rng, v, k).into_iter().map(|u| (u, v)));
    }
    build_graph(n, &e)
}

fn nums(kind: &str, params: &[&str], want: usize) -> Result<Vec<usize>> {
    if params.len() != want {
        return bad(format!("{kind} takes {want} parameter(s), got {}", params.len()));
    }
    params
        .iter()
        .map(|p| p.parse().or_else(|_| bad(format!("{kind}: bad parameter {p:?}"))))
        .collect()
}

/// Generator names accepted by [`gen`].
pub const KINDS: [&str; 11] = [
    "star",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "double_star",
    "dumbbell",
    "gen_unbalanced",
    "gen_lowdeg",
    "random_connected",
    "random_k_connected",
];

/// Build a generator by name from textual parameters.
pub fn gen(kind: &str, params: &[&str]) -> Result<Graph> {
    match kind {
        "star" => star(nums(kind, params, 1)?[0]),
        "path" => path(nums(kind, params, 1)?[0]),
        "cycle" => cycle(nums(kind, params, 1)?[0]),
        "complete" => complete(nums(kind, params, 1)?[0]),
        "complete_bipartite" => {
            let p = nums(kind, params, 2)?;
            complete_bipartite(p[0], p[1])
        }
        "double_star" => {
            let p = nums(kind, params, 2)?;
            double_star(p[0], p[1])
        }
        "dumbbell" => {
            nums(kind, params, 0)?;
            Ok(dumbbell())
        }
        "gen_unbalanced" => {
            let p = nums(kind, params, 3)?;
            unbalanced(p[0], p[1], p[2])
        }
        "gen_lowdeg" => {
            let p = nums(kind, params, 4)?;
            lowdeg(p[0], p[1], p[2], p[3])
        }
        "random_connected" => {
            if params.len() != 3 {
                return bad("random_connected takes n p seed");
            }
            let n = nums(kind, &params[..1], 1)?[0];
            let p: f64 = params[1].parse().or_else(|_| bad(format!("bad probability {:?}", params[1])))?;
            let seed: u64 = params[2].parse().or_else(|_| bad(format!("bad seed {:?}", params[2])))?;
            random_connected(n, p, seed)
        }
        "random_k_connected" => {
            let p = nums(kind, params, 3)?;
            random_k_connected(p[0], p[1], p[2] as u64)
        }
        _ => bad(format!("unknown generator {kind:?}; known: {}", KINDS.join(", "))),
    }
}

/// Small named graphs from every generator plus 100 random connected graphs,
/// all with at most 16 vertices so that enumeration stays cheap.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut add = |name: String, g: Result<Graph>| out.push((name, g.expect("corpus parameters are valid")));
    for d in 2..=12 {
        add(format!("star({d})"), star(d));
    }
    for n in 2..=12 {
        add(format!("path({n})"), path(n));
    }
    for n in 3..=12 {
        add(format!("cycle({n})"), cycle(n));
    }
    for n in 2..=7 {
        add(format!("complete({n})"), complete(n));
    }
    for a in 1..=5 {
        for b in a..=5 {
            add(format!("complete_bipartite({a},{b})"), complete_bipartite(a, b));
        }
    }
    for d1 in 1..=4 {
        for d2 in d1..=4 {
            add(format!("double_star({d1},{d2})"), double_star(d1, d2));
        }
    }
    add("dumbbell".into(), Ok(dumbbell()));
    for t in 3..=6 {
        for k in 1..=3 {
            for r in 1..=3 {
                add(format!("gen_unbalanced({t},{k},{r})"), unbalanced(t, k, r));
            }
        }
    }
    for t in 4..=6 {
        for k in 1..=2 {
            for r in 1..=2 {
                for d in [k, t - 1] {
                    add(format!("gen_lowdeg({t},{k},{r},{d})"), lowdeg(t, k, r, d));
                }
            }
        }
    }
    for n in 6..=12 {
        for k in 1..=3 {
            add(format!("random_k_connected({n},{k},{n})"), random_k_connected(n, k, n as u64));
        }
    }
    for i in 0..100u64 {
        let n = 4 + (i % 9) as usize;
        let p = [0.15, 0.3, 0.5, 0.7][(i / 9 % 4) as usize];
        add(format!("random_connected({n},{p},{i})"), random_connected(n, p, i));
    }
    out
}
