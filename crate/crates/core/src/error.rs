use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(usize),

    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),

    #[error("vertex {0} has no incident edges")]
    IsolatedVertex(usize),

    #[error("edge ({u}, {v}) has non-positive weight {w}")]
    NonpositiveWeight { u: usize, v: usize, w: f64 },

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} is listed twice")]
    DuplicateVertex(usize),

    #[error("partition covers {partition} vertices but the graph has {graph}")]
    PartitionSizeMismatch { partition: usize, graph: usize },

    #[error("class {0} of the partition is empty")]
    EmptyClass(usize),

    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {gap:e}")]
    NotSymmetric { i: usize, j: usize, gap: f64 },

    #[error("matrix must have order at least 1")]
    EmptyMatrix,

    #[error("matrix dimensions do not agree: {0}")]
    DimensionMismatch(String),

    #[error(
        "Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {residual:e})"
    )]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("cannot interlace a spectrum of order {small} into one of order {big}")]
    SizeMismatch { big: usize, small: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("not a normalized Laplacian spectrum: {0}")]
    NotALaplacianSpectrum(String),

    #[error("largest eigenvalue {0} is not above 1; the Laplacian is degenerate")]
    DegenerateLambda(f64),

    #[error("graph has {n} vertices, above the limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("partition is not a proper colouring: edge ({0}, {1}) is monochromatic")]
    NotProper(usize, usize),

    #[error("the quantity needs at least two classes")]
    SingleClass,

    #[error("invalid class count {k} for {n} vertices")]
    InvalidClassCount { k: usize, n: usize },

    #[error("hyperedge {index} is not {m}-uniform: {detail}")]
    NotUniform {
        index: usize,
        m: usize,
        detail: String,
    },

    #[error("hyperedges {0} and {1} share more than one vertex")]
    NotLinear(usize, usize),

    #[error("vertex {0} lies in no hyperedge")]
    UncoveredVertex(usize),

    #[error("random generation failed after {attempts} attempts ({accepted} of {wanted} hyperedges placed)")]
    GenerationFailed {
        attempts: usize,
        accepted: usize,
        wanted: usize,
    },

    #[error("graph has no edges")]
    NoEdges,
}
