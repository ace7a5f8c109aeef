//! Pruning, the failure oracle and the volume checksum against direct
//! computation.

use itertools::Itertools;
use proptest::prelude::*;

use shredder_core::connectivity::vertex_connectivity;
use shredder_core::graph::{component_count, components, volume};
use shredder_core::oracle::{DfsTree, FailureOracle};
use shredder_core::paths::{openly_disjoint_paths, Candidate, PathSystem};
use shredder_core::prune::{bridges_of, prune_candidates, straddles, BridgeKind};
use shredder_core::resolution::volume_checksum;
use shredder_core::testkit::{complete_bipartite, random_connected};
use shredder_core::{build_graph, Graph, VertexSet};

fn small_graph() -> impl Strategy<Value = Graph> {
    (3usize..11, 0.1f64..0.7, any::<u64>()).prop_map(|(n, p, s)| random_connected(n, p, s).unwrap())
}

fn reachable(g: &Graph, removed: &VertexSet, a: usize, b: usize) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(u) = stack.pop() {
        if u == b {
            return true;
        }
        for &w in g.neighbors(u) {
            if !seen[w] && !removed.contains(w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

fn brute_prune(g: &Graph, cands: &[Candidate], ps: &PathSystem) -> Vec<VertexSet> {
    let bridges = bridges_of(g, ps, None);
    cands
        .iter()
        .filter(|c| {
            !bridges.iter().any(|b| straddles(g, &b.attachments, c, ps))
                && !cands.iter().any(|o| straddles(g, &o.vertex_set(), c, ps))
        })
        .map(Candidate::vertex_set)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn prune_matches_pairwise_filter(g in small_graph(), picks in proptest::collection::vec(any::<u64>(), 1..8), ends in (any::<usize>(), any::<usize>())) {
        prop_assume!(!g.is_complete());
        let n = g.n();
        let (x, y) = (ends.0 % n, ends.1 % n);
        prop_assume!(x != y && !g.has_edge(x, y));
        let k = vertex_connectivity(&g);
        let ps = openly_disjoint_paths(&g, x, y, k).unwrap();
        let bridges = bridges_of(&g, &ps, None);
        let mut cands: Vec<Candidate> = bridges.iter().filter_map(|b| ps.tuple_of(&g, &b.attachments)).collect();
        for p in picks {
            let pick = VertexSet::new(ps.paths().iter().enumerate().map(|(i, path)| {
                let inner = path.len() - 2;
                path[1 + (p.rotate_left(7 * i as u32) as usize) % inner]
            }));
            cands.push(ps.tuple_of(&g, &pick).unwrap());
        }
        cands.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        cands.dedup_by(|a, b| a.vertices == b.vertices);
        let got: Vec<VertexSet> = prune_candidates(&g, &cands, &bridges, &ps).iter().map(Candidate::vertex_set).collect();
        prop_assert_eq!(got, brute_prune(&g, &cands, &ps));
    }

    #[test]
    fn oracle_matches_search(g in small_graph(), mask in any::<u32>()) {
        let n = g.n();
        let u = VertexSet::new((0..n).filter(|&v| mask >> v & 1 == 1));
        prop_assume!(u.len() < n);
        let mut o = FailureOracle::preprocess(&g).unwrap();
        o.update(&u);
        let tree = o.dfs().clone();
        let alive: Vec<usize> = (0..n).filter(|&v| !u.contains(v)).collect();
        let reps = o.internal_representatives(&u);
        for &r in &reps {
            prop_assert!(!u.contains(r));
            prop_assert!(u.iter().any(|a| tree.is_ancestor(r, a)));
        }
        for (&a, &b) in alive.iter().tuple_combinations() {
            let truth = reachable(&g, &u, a, b);
            prop_assert_eq!(o.connected(a, b).unwrap(), truth);
            let same_piece = o.component_root(a, &u).unwrap() == o.component_root(b, &u).unwrap();
            let via_rep = reps.iter().any(|&r| reachable(&g, &u, a, r) && reachable(&g, &u, b, r));
            prop_assert_eq!(same_piece || via_rep, truth);
        }
    }

    #[test]
    fn dfs_edges_are_vertical(g in small_graph()) {
        let t = DfsTree::new(&g);
        prop_assert!(t.edges_are_vertical(&g));
        for v in 0..g.n() {
            match t.parent[v] {
                None => prop_assert_eq!(v, t.root),
                Some(p) => {
                    prop_assert!(g.has_edge(p, v));
                    prop_assert_eq!(t.depth[v], t.depth[p] + 1);
                    prop_assert!(t.children(p).contains(&v));
                }
            }
        }
    }

    #[test]
    fn checksum_detects_third_component(g in small_graph(), mask in any::<u32>()) {
        let u = VertexSet::new((0..g.n()).filter(|&v| mask >> v & 1 == 1));
        let comps = components(&g, &u).unwrap();
        prop_assume!(comps.len() >= 2);
        let vols: Vec<usize> = comps.iter().map(|c| volume(&g, c).unwrap()).collect();
        for (a, b) in (0..comps.len()).tuple_combinations() {
            prop_assert_eq!(volume_checksum(&g, &u, vols[a], vols[b]), comps.len() >= 3);
        }
    }
}

#[test]
fn bridges_of_k33() {
    let g = complete_bipartite(3, 3).unwrap();
    let ps = openly_disjoint_paths(&g, 0, 1, 3).unwrap();
    let bridges = bridges_of(&g, &ps, None);
    // the paths use all of 3..6; vertex 2 is the only component
    assert_eq!(bridges.len(), 1);
    assert_eq!(bridges[0].kind, BridgeKind::Component(VertexSet::new([2])));
    assert_eq!(bridges[0].attachments, VertexSet::new([3, 4, 5]));
    assert_eq!(bridges[0].volume, 3);
    let c = ps.tuple_of(&g, &VertexSet::new([3, 4, 5])).unwrap();
    assert_eq!(prune_candidates(&g, &[c.clone()], &bridges, &ps), vec![c]);
}

#[test]
fn straddled_candidate_dies() {
    // ladder: two paths 0-1-2-3-5 and 0-4-6-7-5 with a rung 1-7
    let g = build_graph(8, &[(0, 1), (1, 2), (2, 3), (3, 5), (0, 4), (4, 6), (6, 7), (7, 5), (1, 7)]).unwrap();
    let ps = PathSystem::new(&g, 0, vec![vec![0, 1, 2, 3, 5], vec![0, 4, 6, 7, 5]]).unwrap();
    let bridges = bridges_of(&g, &ps, None);
    let low = ps.tuple_of(&g, &VertexSet::new([2, 4])).unwrap();
    let safe = ps.tuple_of(&g, &VertexSet::new([3, 7])).unwrap();
    assert!(straddles(&g, &VertexSet::new([1, 7]), &low, &ps));
    let kept = prune_candidates(&g, &[low, safe.clone()], &bridges, &ps);
    assert_eq!(kept, vec![safe]);
    assert_eq!(component_count(&g, &[2, 4]), 1);
}
