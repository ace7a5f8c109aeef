//! Listing every minimum vertex cut whose removal leaves at least three
//! components (a k-shredder), and finding the most shattering one.
//!
//! The listing is randomized: balanced shredders are found by sampling pairs
//! and running a global flow, unbalanced ones by local exploration around
//! sampled seeds. Every reported shredder is verified; completeness holds with
//! high probability.

pub mod error;
pub mod graph;
mod flow;
mod stamp;
pub mod connectivity;
pub mod sparsify;
pub mod paths;
pub mod prune;
pub mod record;
pub mod pairwise;
pub mod local;
pub mod localvc;
pub mod oracle;
pub mod resolution;
pub mod driver;
pub mod brute;
pub mod testkit;

pub use error::{Error, Result};
pub use graph::{build_graph, parse_graph, Graph, Partition, VertexSet};
pub use record::{Provenance, SamplingConfig, ShredderRecord};
pub use driver::{list_all, list_all_with_k, most_shattering, most_shattering_with, MostShatteringResult};
