use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("graph is not bipartite; odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },
    #[error("bipartition is inconsistent with the graph: {0}")]
    InconsistentBipartition(String),
    #[error("{op} requires at least {min} vertices, got {n}")]
    TooFewVertices { op: &'static str, n: usize, min: usize },
    #[error("{op} supports at most {max} vertices, got {n}")]
    ScaleCap { op: &'static str, n: usize, max: usize },
    #[error("power iteration did not converge after {iterations} iterations (estimate {estimate}, residual {residual:e})")]
    NotConverged { iterations: usize, estimate: f64, residual: f64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error("not a subgraph: {0}")]
    NotSubgraph(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("vector has zero norm")]
    ZeroVector,
}
