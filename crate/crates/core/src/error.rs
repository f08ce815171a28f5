use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("instance too large: n={n} exceeds cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("search budget exceeded ({0} nodes)")]
    BudgetExceeded(u64),
    #[error("cycle enumeration cap exceeded ({0} cycles)")]
    CycleCapExceeded(usize),
    #[error("declared sides are not a bipartition: {0}")]
    NotBipartite(String),
    #[error("sets X and Y overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(usize, usize),
    #[error("vertices must be distinct, got {0} twice")]
    NotDistinct(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;
