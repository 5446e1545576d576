use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at pair [{0},{0}]")]
    SelfLoop(usize),
    #[error("pair [{u},{v}] has an endpoint outside 1..={n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("invalid rooted tree: {0}")]
    InvalidTree(String),
    #[error("polynomial ambient sizes differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex count mismatch: graph has {graph}, tree has {tree}")]
    VertexMismatch { graph: usize, tree: usize },
    #[error("invalid operational set: {0}")]
    InvalidOperationalSet(String),
    #[error("invalid weight sequence: {0}")]
    InvalidWeights(String),
    #[error("invalid pair: {0}")]
    InvalidPair(String),
    #[error("psi found no admissible root (remaining weights {0:?}); input was not a valid B pair")]
    PsiExhausted(Vec<usize>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
