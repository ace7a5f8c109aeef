use shredder_core::brute::{brute_shredders, brute_vertex_connectivity};
use shredder_core::graph::partition_of;
use shredder_core::testkit::{self, gen, KINDS};
use shredder_core::{Error, VertexSet};

#[test]
fn planted_unbalanced_instance() {
    let g = gen("gen_unbalanced", &["6", "2", "2"]).unwrap();
    assert_eq!(brute_vertex_connectivity(&g).unwrap(), 2);
    let s = VertexSet::new([6, 7]);
    assert_eq!(brute_shredders(&g, 2).unwrap(), vec![(s.clone(), 3)]);
    let p = partition_of(&g, &s).unwrap();
    assert_eq!(p.vol_rest, 4);
    assert!(p.vol_rest * 2 < g.m());
    let nu = p.vol_rest.next_power_of_two();
    assert!(s.iter().all(|v| g.degree(v) > nu));
}

#[test]
fn planted_low_degree_instance() {
    let g = gen("gen_lowdeg", &["6", "2", "3", "2"]).unwrap();
    assert_eq!(brute_vertex_connectivity(&g).unwrap(), 2);
    let s = VertexSet::new([6, 7]);
    let found = brute_shredders(&g, 2).unwrap();
    assert!(found.contains(&(s.clone(), 4)), "{found:?}");
    let nu = partition_of(&g, &s).unwrap().vol_rest.next_power_of_two();
    assert!(s.iter().any(|v| g.degree(v) <= nu));
}

#[test]
fn dumbbell_has_many_four_shredders() {
    let g = testkit::dumbbell();
    assert_eq!(brute_vertex_connectivity(&g).unwrap(), 3);
    assert!(brute_shredders(&g, 4).unwrap().len() >= 8);
}

#[test]
fn named_families() {
    assert_eq!(brute_vertex_connectivity(&gen("complete_bipartite", &["3", "3"]).unwrap()).unwrap(), 3);
    assert_eq!(brute_shredders(&gen("star", &["4"]).unwrap(), 1).unwrap(), vec![(VertexSet::new([0]), 4)]);
    assert_eq!(brute_vertex_connectivity(&gen("cycle", &["6"]).unwrap()).unwrap(), 2);
    assert_eq!(brute_vertex_connectivity(&gen("path", &["5"]).unwrap()).unwrap(), 1);
    assert_eq!(gen("complete", &["5"]).unwrap().m(), 10);
    let ds = gen("double_star", &["2", "3"]).unwrap();
    assert_eq!(brute_shredders(&ds, 1).unwrap().len(), 2);
    for seed in 0..20 {
        for k in 1..=3 {
            let g = testkit::random_k_connected(12, k, seed).unwrap();
            assert_eq!(brute_vertex_connectivity(&g).unwrap(), k);
        }
        assert!(gen("random_connected", &["9", "0.2", &seed.to_string()]).unwrap().is_connected());
    }
}

#[test]
fn every_kind_builds() {
    let params: [&[&str]; 11] = [&["3"], &["3"], &["4"], &["3"], &["2", "2"], &["1", "1"], &[], &["4", "1", "1"], &["4", "1", "1", "2"], &["6", "0.3", "1"], &["8", "2", "1"]];
    for (kind, p) in KINDS.iter().zip(params) {
        assert!(gen(kind, p).unwrap().is_connected(), "{kind}");
    }
    assert!(matches!(gen("nope", &[]), Err(Error::BadParams(_))));
    assert!(matches!(gen("star", &["x"]), Err(Error::BadParams(_))));
    assert!(matches!(gen("gen_lowdeg", &["4", "3", "1", "2"]), Err(Error::BadParams(_))));
}

#[test]
fn corpus_is_large_enough() {
    let c = testkit::corpus();
    assert!(c.len() >= 200);
    assert_eq!(c.iter().filter(|(name, _)| name.starts_with("random_connected")).count(), 100);
    assert!(c.iter().all(|(_, g)| g.is_connected() && g.n() <= 16));
}
