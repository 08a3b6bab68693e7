use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("vertex {vertex} is not a cut vertex")]
    NotCutVertex { vertex: usize },

    #[error("graph is not a forest")]
    NotForest,

    #[error("graph is not a tree")]
    NotTree,

    #[error("search too large: {n} vertices exceeds the configured cap of {cap}")]
    SearchTooLarge { n: usize, cap: usize },

    #[error("unknown block: {0}")]
    UnknownBlock(String),

    #[error("invalid region [{i}, {j}] for cap {n}")]
    InvalidRegion { i: usize, j: usize, n: usize },

    #[error("target {target:?} is not northeast of {from:?} within rank {n}")]
    OutsideCone {
        from: (usize, usize),
        target: (usize, usize),
        n: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("partial inertia {target:?} is not achievable; computed set: {set}")]
    NotAchievable { target: (usize, usize), set: String },

    #[error("no constructive witness available: {0}")]
    NoWitness(String),

    #[error("registry: {0}")]
    Registry(String),

    #[error("matrix: {0}")]
    Matrix(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("set is not partition-shaped: {0}")]
    NotPartitionShaped(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
