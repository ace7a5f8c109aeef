use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("removing the given set leaves the graph connected")]
    NotASeparator,
    #[error("only {found} openly-disjoint paths between {x} and {y}, needed {needed}")]
    CutSmallerThanK { x: usize, y: usize, found: usize, needed: usize },
    #[error("malformed path system: {0}")]
    MalformedTuple(String),
    #[error("vertex {0} is currently failed")]
    QueriedFailedVertex(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("complete graph has no vertex cut")]
    NoVertexCut,
    #[error("instance too large for exhaustive enumeration (n = {n}, s = {s})")]
    TooLarge { n: usize, s: usize },
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
