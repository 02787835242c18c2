use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge weight must be positive, got {0}")]
    NonPositiveWeight(String),

    #[error("edge id {0} is not above the last assigned id")]
    EdgeIdOrder(usize),

    #[error("{what} refuses graphs with n = {n}; limit is {limit}{hint}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
        hint: &'static str,
    },

    #[error("edge {edge} has weight {weight}, expected unit weights (expand integer weights with streamkit::unit_expand)")]
    NonUnitWeight { edge: usize, weight: String },

    #[error("edge {edge} has non-integer weight {weight}")]
    NonIntegerWeight { edge: usize, weight: String },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Domain(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
