use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use shredder_core::oracle::FailureOracle;
use shredder_core::resolution::{count_low_degree_components, high_degree_extract, low_degree_check, UnverifiedRecord};
use shredder_core::testkit::{lowdeg, unbalanced};
use shredder_core::{Provenance, SamplingConfig, VertexSet};

/// Record for the planted shredder seen from the first singleton.
fn planted(t: usize, k: usize, nu: usize) -> UnverifiedRecord {
    UnverifiedRecord {
        x: t + k,
        nu,
        u: VertexSet::new(t..t + k),
        frontier: (t..t + k).zip(0..k).collect(),
        vol_qx: k,
    }
}

#[test]
fn low_degree_planted() {
    let g = lowdeg(6, 2, 3, 2).unwrap();
    let mut o = FailureOracle::preprocess(&g).unwrap();
    let r = planted(6, 2, 8);
    assert!(low_degree_check(&g, &mut o, &r));
    assert_eq!(count_low_degree_components(&g, &mut o, &r).unwrap(), 4);
    // the shredder vertices have degree 6, above this budget
    assert!(!low_degree_check(&g, &mut o, &planted(6, 2, 4)));
    // a single singleton gives a separator with two sides only
    let g = lowdeg(6, 2, 1, 2).unwrap();
    let mut o = FailureOracle::preprocess(&g).unwrap();
    assert!(!low_degree_check(&g, &mut o, &planted(6, 2, 8)));
}

#[test]
fn high_degree_planted() {
    let g = unbalanced(6, 2, 2).unwrap();
    let rec = planted(6, 2, 4);
    let mut hits = 0;
    for seed in 0..100 {
        let out = high_degree_extract(&g, &[rec.clone()], &mut ChaCha8Rng::seed_from_u64(seed), &SamplingConfig::DESK);
        assert!(out.len() <= 1);
        if let Some(r) = out.first() {
            assert_eq!((&r.vertices, r.provenance), (&rec.u, Provenance::HighDegree));
            assert_eq!(r.components, 3);
            hits += 1;
        }
    }
    assert!(hits >= 99, "{hits}/100");
}

#[test]
fn high_degree_skips_separators() {
    let g = unbalanced(6, 2, 1).unwrap();
    let rec = planted(6, 2, 2);
    for seed in 0..100 {
        let out = high_degree_extract(&g, &[rec.clone()], &mut ChaCha8Rng::seed_from_u64(seed), &SamplingConfig::DESK);
        assert!(out.is_empty(), "seed {seed}: {out:?}");
    }
}
