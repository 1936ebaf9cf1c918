use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("not bipartite: odd cycle through vertex {0}")]
    NotBipartite(usize),

    #[error("not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },

    #[error("graph is not planar")]
    NonPlanar,

    #[error("graph has a bridge {0:?}; a connected bipartite cubic graph is 2-edge-connected")]
    Bridge((usize, usize)),

    #[error("input is not a valid BCP embedding: {0}")]
    NotBcpEmbedding(String),

    #[error("invalid face coloring: edge {edge:?} separates two faces of color {color}")]
    InvalidFaceColoring { edge: (usize, usize), color: String },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error(
        "sub-hamiltonian construction not implemented: no Hamiltonian spine for a \
         {n}-vertex 3-connected leaf within {budget} search nodes"
    )]
    SubHamiltonianUnsupported { n: usize, budget: u64 },

    #[error("Hamiltonian cycle search exceeded {budget} nodes")]
    HamiltonianBudget { budget: u64 },

    #[error("graph has {n} vertices, over the exhaustive oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid generator parameters: {0}")]
    Generator(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Whether the error reflects a bad input, as opposed to a broken
    /// internal invariant.
    pub fn is_invalid_input(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}
