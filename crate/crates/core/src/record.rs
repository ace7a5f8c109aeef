use crate::graph::VertexSet;

/// Which routine produced a record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Balanced,
    Local,
    LowDegree,
    HighDegree,
}

/// A k-shredder and the number of components it leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShredderRecord {
    pub vertices: VertexSet,
    pub components: usize,
    pub provenance: Provenance,
}

impl ShredderRecord {
    pub fn new(vertices: VertexSet, components: usize, provenance: Provenance) -> Self {
        ShredderRecord { vertices, components, provenance }
    }
}

/// Loop multipliers for the randomized listing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingConfig {
    /// Edge samples per volume scale, times (m / ν) log n.
    pub hit_factor: usize,
    /// Path-system attempts per sample, times log n.
    pub boost_factor: usize,
    /// Pair samples for balanced shredders, times k log n.
    pub balanced_factor: usize,
    /// Target failure exponent; only recorded for reporting.
    pub prob_exponent: usize,
}

impl SamplingConfig {
    /// Constants sized for graphs of up to a few thousand vertices.
    pub const DESK: SamplingConfig = SamplingConfig { hit_factor: 8, boost_factor: 8, balanced_factor: 16, prob_exponent: 2 };
    /// The constants behind the n^{-100} failure bound.
    pub const FULL: SamplingConfig =
        SamplingConfig { hit_factor: 400, boost_factor: 300, balanced_factor: 800, prob_exponent: 100 };

    pub fn is_valid(&self) -> bool {
        self.hit_factor >= 1 && self.boost_factor >= 1 && self.balanced_factor >= 1 && self.prob_exponent >= 1
    }
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig::DESK
    }
}
