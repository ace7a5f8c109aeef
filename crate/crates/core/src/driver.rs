//! Top-level listing of all k-shredders and the most shattering minimum cut.

use std::collections::{HashMap, HashSet};

use rand::Rng;

use crate::connectivity::{min_vertex_cut, vertex_connectivity};
use crate::error::{Error, Result};
use crate::graph::{component_count, log_n, Graph, VertexSet};
use crate::local::LocalLister;
use crate::localvc::LocalVc;
use crate::oracle::FailureOracle;
use crate::pairwise::shredders_between;
use crate::paths::PathSystem;
use crate::record::{Provenance, SamplingConfig, ShredderRecord};
use crate::resolution::{count_low_degree_components, high_degree_extract, low_degree_check, UnverifiedRecord};
use crate::sparsify::sparsify;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MostShatteringResult {
    pub cut: VertexSet,
    pub components: usize,
    pub is_shredder: bool,
}

/// Canonical set → best record so far.
///
/// Every route reports a lower bound on the component count, so merging
/// keeps the maximum. `exact` marks counts that came from a global count.
#[derive(Default)]
struct Registry {
    map: HashMap<VertexSet, (ShredderRecord, bool)>,
}

impl Registry {
    fn merge(&mut self, rec: ShredderRecord, exact: bool) {
        match self.map.get_mut(&rec.vertices) {
            Some((old, ex)) => {
                if exact && *ex {
                    debug_assert_eq!(old.components, rec.components, "exact counts disagree for {}", rec.vertices);
                }
                *ex |= exact;
                if rec.components > old.components {
                    *old = rec;
                }
            }
            None => {
                self.map.insert(rec.vertices.clone(), (rec, exact));
            }
        }
    }

    fn is_exact(&self, s: &VertexSet) -> bool {
        self.map.get(s).is_some_and(|(_, ex)| *ex)
    }

    fn into_sorted(self) -> Vec<ShredderRecord> {
        let mut out: Vec<ShredderRecord> = self.map.into_values().map(|(r, _)| r).collect();
        out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        out
    }
}

fn random_endpoint<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> usize {
    g.target(rng.gen_range(0..g.slot_count()))
}

fn check_config(cfg: &SamplingConfig) -> Result<()> {
    if cfg.is_valid() {
        Ok(())
    } else {
        Err(Error::BadParams(format!("sampling factors must be positive: {cfg:?}")))
    }
}

fn balanced_into<R: Rng + ?Sized>(
    g: &Graph,
    k: usize,
    rng: &mut R,
    cfg: &SamplingConfig,
    reg: &mut Registry,
) -> Result<()> {
    if g.m() == 0 {
        return Ok(());
    }
    let rounds = cfg.balanced_factor * k * log_n(g.n());
    for _ in 0..rounds {
        let x = random_endpoint(g, rng);
        let y = random_endpoint(g, rng);
        if x == y {
            continue;
        }
        for rec in shredders_between(g, x, y, k)? {
            reg.merge(rec, true);
        }
    }
    Ok(())
}

/// Shredders separating randomly sampled pairs; catches every balanced one
/// with high probability.
pub fn list_balanced<R: Rng + ?Sized>(g: &Graph, k: usize, rng: &mut R, cfg: &SamplingConfig) -> Result<Vec<ShredderRecord>> {
    check_config(cfg)?;
    let mut reg = Registry::default();
    balanced_into(g, k, rng, cfg, &mut reg)?;
    Ok(reg.into_sorted())
}

fn unbalanced_into<R: Rng + ?Sized>(
    g: &Graph,
    k: usize,
    rng: &mut R,
    cfg: &SamplingConfig,
    reg: &mut Registry,
) -> Result<()> {
    let m = g.m();
    if m == 0 || k == 0 {
        return Ok(());
    }
    let mut oracle = FailureOracle::preprocess(g)?;
    let mut lister = LocalLister::new(g);
    let mut lvc = LocalVc::new(g);
    let logn = log_n(g.n());
    // sets already decided by the low-degree route, either way
    let mut settled: HashSet<VertexSet> = HashSet::new();
    let mut pool: Vec<UnverifiedRecord> = Vec::new();
    let mut pooled: HashSet<(VertexSet, usize)> = HashSet::new();
    let attempts = cfg.boost_factor * logn;
    let mut ps = PathSystem::new_unchecked(0, Vec::new());
    let mut nu = 1usize;
    loop {
        let samples = cfg.hit_factor * m.div_ceil(nu) * logn;
        for _ in 0..samples {
            let x = random_endpoint(g, rng);
            for _ in 0..attempts {
                if !lvc.run_into(g, x, nu, k, rng, &mut ps) {
                    continue;
                }
                let res = lister.list(g, x, nu, &ps);
                for rec in res.shredders {
                    reg.merge(rec, false);
                }
                let (Some(u), Some(vol_qx)) = (res.unverified, res.vol_qx) else { continue };
                if reg.is_exact(&u) || settled.contains(&u) {
                    continue;
                }
                let rec = UnverifiedRecord { x, nu, u, frontier: res.frontier, vol_qx };
                if rec.frontier.iter().any(|&(v, _)| g.degree(v) <= nu) {
                    if low_degree_check(g, &mut oracle, &rec) {
                        let count = count_low_degree_components(g, &mut oracle, &rec)?;
                        reg.merge(ShredderRecord::new(rec.u.clone(), count, Provenance::LowDegree), true);
                    }
                    settled.insert(rec.u);
                } else if pooled.insert((rec.u.clone(), x)) {
                    pool.push(rec);
                }
            }
        }
        if nu * k >= m {
            break;
        }
        nu *= 2;
    }
    pool.retain(|r| !settled.contains(&r.u) && !reg.is_exact(&r.u));
    for rec in high_degree_extract(g, &pool, rng, cfg) {
        reg.merge(rec, false);
    }
    Ok(())
}

/// Shredders found by local exploration from sampled seeds; catches every
/// unbalanced one with high probability.
pub fn list_unbalanced<R: Rng + ?Sized>(g: &Graph, k: usize, rng: &mut R, cfg: &SamplingConfig) -> Result<Vec<ShredderRecord>> {
    check_config(cfg)?;
    let mut reg = Registry::default();
    unbalanced_into(g, k, rng, cfg, &mut reg)?;
    Ok(reg.into_sorted())
}

fn should_sparsify(g: &Graph, k: usize, sparsify_first: bool) -> bool {
    sparsify_first && g.m() > (k + 1) * g.n().saturating_sub(1)
}

/// All k-shredders for a known connectivity `k`, sorted canonically.
pub fn list_all_with_k<R: Rng + ?Sized>(
    g: &Graph,
    k: usize,
    rng: &mut R,
    cfg: &SamplingConfig,
    sparsify_first: bool,
) -> Result<Vec<ShredderRecord>> {
    check_config(cfg)?;
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if k == 0 {
        return Err(Error::PreconditionViolated("connectivity must be positive".into()));
    }
    let sparse;
    let h = if should_sparsify(g, k, sparsify_first) {
        sparse = sparsify(g, k);
        &sparse
    } else {
        g
    };
    let mut reg = Registry::default();
    balanced_into(h, k, rng, cfg, &mut reg)?;
    unbalanced_into(h, k, rng, cfg, &mut reg)?;
    Ok(reg.into_sorted())
}

/// κ(G) and every κ(G)-shredder. Complete graphs have none.
pub fn list_all<R: Rng + ?Sized>(
    g: &Graph,
    rng: &mut R,
    cfg: &SamplingConfig,
    sparsify_first: bool,
) -> Result<(usize, Vec<ShredderRecord>)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Ok((g.n() - 1, Vec::new()));
    }
    let k = vertex_connectivity(g);
    Ok((k, list_all_with_k(g, k, rng, cfg, sparsify_first)?))
}

/// The shredder with the most components, ties to the smallest set.
pub fn pick_most_shattering(listing: &[ShredderRecord]) -> Option<MostShatteringResult> {
    listing
        .iter()
        .max_by(|a, b| a.components.cmp(&b.components).then_with(|| b.vertices.cmp(&a.vertices)))
        .map(|r| MostShatteringResult { cut: r.vertices.clone(), components: r.components, is_shredder: true })
}

/// A minimum vertex cut maximizing the number of components.
///
/// Without any shredder, some minimum separator is returned with count 2.
pub fn most_shattering<R: Rng + ?Sized>(g: &Graph, rng: &mut R, cfg: &SamplingConfig) -> Result<MostShatteringResult> {
    most_shattering_with(g, rng, cfg, true)
}

pub fn most_shattering_with<R: Rng + ?Sized>(
    g: &Graph,
    rng: &mut R,
    cfg: &SamplingConfig,
    sparsify_first: bool,
) -> Result<MostShatteringResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (k, witness) = min_vertex_cut(g).ok_or(Error::NoVertexCut)?;
    let listing = list_all_with_k(g, k, rng, cfg, sparsify_first)?;
    Ok(shattering_from_listing(g, k, listing, witness, sparsify_first))
}

/// The most shattering answer given a listing of all k-shredders and some
/// minimum separator to fall back on.
///
/// Counts are recomputed on `g` when the listing ran on a sparsified copy.
pub fn shattering_from_listing(
    g: &Graph,
    k: usize,
    mut listing: Vec<ShredderRecord>,
    fallback: VertexSet,
    sparsify_first: bool,
) -> MostShatteringResult {
    if should_sparsify(g, k, sparsify_first) {
        for r in &mut listing {
            r.components = component_count(g, r.vertices.as_slice());
        }
    }
    pick_most_shattering(&listing).unwrap_or(MostShatteringResult { cut: fallback, components: 2, is_shredder: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn k33() -> Graph {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        build_graph(6, &e).unwrap()
    }

    fn summary(list: &[ShredderRecord]) -> Vec<(Vec<usize>, usize)> {
        list.iter().map(|r| (r.vertices.as_slice().to_vec(), r.components)).collect()
    }

    #[test]
    fn small_examples() {
        let cfg = SamplingConfig::DESK;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let star = build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (k, l) = list_all(&star, &mut rng, &cfg, true).unwrap();
        assert_eq!((k, summary(&l)), (1, vec![(vec![0], 3)]));
        let (k, l) = list_all(&k33(), &mut rng, &cfg, true).unwrap();
        assert_eq!((k, summary(&l)), (3, vec![(vec![0, 1, 2], 3), (vec![3, 4, 5], 3)]));
        let c4 = build_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (k, l) = list_all(&c4, &mut rng, &cfg, true).unwrap();
        assert_eq!((k, l.len()), (2, 0));
        let ms = most_shattering(&c4, &mut rng, &cfg).unwrap();
        assert!(!ms.is_shredder && ms.components == 2);
        assert!(ms.cut == VertexSet::new([0, 2]) || ms.cut == VertexSet::new([1, 3]));
        let ms = most_shattering(&k33(), &mut rng, &cfg).unwrap();
        assert_eq!((ms.cut, ms.components, ms.is_shredder), (VertexSet::new([0, 1, 2]), 3, true));
        let l = list_unbalanced(&star, 1, &mut rng, &cfg).unwrap();
        assert_eq!(summary(&l), vec![(vec![0], 3)]);
    }

    #[test]
    fn errors() {
        let cfg = SamplingConfig::DESK;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let split = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(list_all(&split, &mut rng, &cfg, true), Err(Error::Disconnected)));
        let k4 = build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(list_all(&k4, &mut rng, &cfg, true).unwrap(), (3, Vec::new()));
        assert!(matches!(most_shattering(&k4, &mut rng, &cfg), Err(Error::NoVertexCut)));
        let bad = SamplingConfig { hit_factor: 0, ..cfg };
        assert!(list_balanced(&k33(), 3, &mut rng, &bad).is_err());
    }
}
