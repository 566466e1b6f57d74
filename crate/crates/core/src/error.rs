use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),

    #[error("vertex name `{0}` occurs in more than one join factor")]
    NameCollision(String),

    #[error("graph has {vertices} vertices; automorphism search is bounded at {limit}")]
    TooManyVertices { vertices: usize, limit: usize },

    #[error("graph has more than {limit} automorphisms")]
    TooManyAutomorphisms { limit: usize },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error("{0}")]
    Precondition(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
