//! Exhaustive reference answers for small graphs.

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity::min_vertex_cut;
use crate::driver::{list_all, shattering_from_listing, MostShatteringResult};
use crate::error::{Error, Result};
use crate::graph::{component_count, Graph, VertexSet};
use crate::record::SamplingConfig;

fn guard(g: &Graph, s: usize) -> Result<()> {
    if g.n() <= 16 || s <= 3 {
        Ok(())
    } else {
        Err(Error::TooLarge { n: g.n(), s })
    }
}

/// Every `s`-set leaving at least three components, with its count.
pub fn brute_shredders(g: &Graph, s: usize) -> Result<Vec<(VertexSet, usize)>> {
    guard(g, s)?;
    Ok((0..g.n())
        .combinations(s)
        .filter_map(|c| {
            let b = component_count(g, &c);
            (b >= 3).then(|| (VertexSet::new(c), b))
        })
        .collect())
}

/// Smallest separating set, by enumeration; `None` for complete graphs.
pub fn brute_min_separator(g: &Graph) -> Result<Option<VertexSet>> {
    if g.is_complete() {
        return Ok(None);
    }
    for s in 0..g.n() {
        guard(g, s)?;
        if let Some(c) = (0..g.n()).combinations(s).find(|c| component_count(g, c) >= 2) {
            return Ok(Some(VertexSet::new(c)));
        }
    }
    unreachable!("a non-complete graph has a separator")
}

/// κ(G) by enumeration; `n − 1` for complete graphs.
pub fn brute_vertex_connectivity(g: &Graph) -> Result<usize> {
    Ok(match brute_min_separator(g)? {
        Some(s) => s.len(),
        None => g.n().saturating_sub(1),
    })
}

/// Most shattering minimum cut, ties to the smallest set.
pub fn brute_most_shattering(g: &Graph) -> Result<MostShatteringResult> {
    let sep = brute_min_separator(g)?.ok_or(Error::NoVertexCut)?;
    // max_by_key keeps the last maximum, so walk backwards
    let best = brute_shredders(g, sep.len())?
        .into_iter()
        .rev()
        .max_by_key(|(_, b)| *b);
    Ok(match best {
        Some((cut, components)) => MostShatteringResult { cut, components, is_shredder: true },
        None => MostShatteringResult { components: component_count(g, sep.as_slice()), cut: sep, is_shredder: false },
    })
}

/// Repeated randomized listings compared with enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub k: usize,
    pub expected: Vec<(VertexSet, usize)>,
    /// Brute-force most shattering count; `None` for complete graphs.
    pub expected_shattering: Option<usize>,
    pub runs: usize,
    /// Seeds whose listing differed from enumeration.
    pub listing_mismatches: Vec<u64>,
    /// Seeds whose most shattering count differed.
    pub shattering_mismatches: Vec<u64>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.listing_mismatches.is_empty() && self.shattering_mismatches.is_empty()
    }
}

/// Run the listing with seeds `seed, seed + 1, …` and diff every run
/// against enumeration, both the shredder set with counts and the most
/// shattering count derived from it.
pub fn verify_runs(g: &Graph, seed: u64, runs: usize, cfg: &SamplingConfig, sparsify_first: bool) -> Result<VerifyReport> {
    let sep = brute_min_separator(g)?;
    let k = sep.as_ref().map_or(g.n().saturating_sub(1), |s| s.len());
    let expected = brute_shredders(g, k)?;
    let expected_shattering = match sep {
        Some(_) => Some(brute_most_shattering(g)?.components),
        None => None,
    };
    let fallback = min_vertex_cut(g).map(|(_, c)| c);
    let mut report = VerifyReport {
        k,
        expected,
        expected_shattering,
        runs,
        listing_mismatches: Vec::new(),
        shattering_mismatches: Vec::new(),
    };
    for r in 0..runs as u64 {
        let s = seed.wrapping_add(r);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let (got_k, listing) = list_all(g, &mut rng, cfg, sparsify_first)?;
        let got: Vec<(VertexSet, usize)> = listing.iter().map(|r| (r.vertices.clone(), r.components)).collect();
        if got_k != k || got != report.expected {
            report.listing_mismatches.push(s);
        }
        if let (Some(want), Some(cut)) = (expected_shattering, &fallback) {
            if shattering_from_listing(g, k, listing, cut.clone(), sparsify_first).components != want {
                report.shattering_mismatches.push(s);
            }
        }
    }
    Ok(report)
}
