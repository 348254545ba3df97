use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("embedding error: {0}")]
    Embedding(String),

    #[error("graph is not (2,{k})-sparse")]
    NotSparse { k: i32 },

    #[error("graph is not (2,{k})-tight")]
    NotTight { k: i32 },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not a member of class {0}")]
    ClassMismatch(String),

    #[error("invalid move parameter: {0}")]
    MoveParam(String),

    #[error("decomposition failed: {0}")]
    Decompose(String),

    #[error("search budget of {0} nodes exceeded")]
    Budget(u64),

    #[error("augmentation stalled: {0}")]
    Stall(String),

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("representation failed validation: {0}")]
    Validation(String),

    #[error("unrealizable layout: {0}")]
    Layout(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
