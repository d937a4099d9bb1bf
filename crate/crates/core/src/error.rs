use thiserror::Error;

/// Errors raised by graph construction, coloring checks, subroutines and the solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("loop edge at vertex {0} is not allowed in a simple graph")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    ColoringLength { got: usize, expected: usize },
    #[error("color {color} at edge {edge} is not positive")]
    NonPositiveColor { edge: usize, color: u32 },
    #[error("impropriety is undefined for a graph with no edges")]
    EmptyEdgeSet,
    #[error("vertex {vertex} has odd degree {degree}; an Euler circuit needs even degrees")]
    OddDegree { vertex: usize, degree: usize },
    #[error("graph is not {expected}-regular: vertex {vertex} has degree {degree}")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("graph is not bipartite; odd cycle {0:?}")]
    NotBipartite(Vec<usize>),
    #[error("graph is not a tree")]
    NotTree,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not outerplanar: {0}")]
    NotOuterplanar(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("internal contradiction with a proved guarantee: {0}")]
    Contradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
