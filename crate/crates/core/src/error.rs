use alloc::string::String;

/// Errors produced by graph construction and the analyses built on it.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("adjacency matrix has {found} entries, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("adjacency is not symmetric at ({i}, {j})")]
    Asymmetric { i: usize, j: usize },
    #[error("invalid weight {weight} at ({i}, {j})")]
    InvalidWeight { i: usize, j: usize, weight: f64 },
    #[error("duplicate edge ({i}, {j})")]
    DuplicateEdge { i: usize, j: usize },
    #[error("vertex {0} has degree zero")]
    IsolatedVertex(usize),
    #[error("potential has {found} entries, graph has {expected} vertices")]
    PotentialLength { expected: usize, found: usize },
    #[error("invalid potential value {value} at vertex {index}")]
    InvalidPotential { index: usize, value: f64 },
    #[error("vector has length {found}, expected {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex set must be a non-empty proper subset")]
    ImproperCut,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, above the exhaustive cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("({i}, {j}) is not an edge")]
    NotAnEdge { i: usize, j: usize },
    #[error("edge ({i}, {j}) is not a bridge")]
    NotABridge { i: usize, j: usize },
    #[error("cutting ({i}, {j}) leaves a vertex of degree zero")]
    DegenerateComponent { i: usize, j: usize },
    #[error("graph has {edges} edges, above the planar limit 3n-6 = {limit}")]
    PlanarityContradiction { edges: usize, limit: usize },
    #[error("effective surface area is zero; connectivity is undefined")]
    UndefinedConnectivity,
    #[error("eigensolver did not converge for index {index} after {iterations} iterations")]
    NoConvergence { index: usize, iterations: usize },
    #[error("eigenpair residual {max_residual:e} exceeds tolerance {tol:e}")]
    Uncertified { max_residual: f64, tol: f64 },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("sequence sizes must be strictly increasing")]
    NotIncreasing,
    #[error("sequence needs at least {needed} members, got {found}")]
    SequenceTooShort { needed: usize, found: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
