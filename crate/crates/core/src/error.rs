use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("tree has no vertices")]
    EmptyTree,
    #[error("tree with {vertices} vertices must have {expected} edges, found {found}")]
    EdgeCount {
        vertices: usize,
        expected: usize,
        found: usize,
    },
    #[error("tree has {0} edges; at most {max} are supported", max = crate::tree::MAX_EDGES)]
    TooManyEdges(usize),
    #[error("vertex {vertex} out of range for a tree with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge {edge} out of range for a tree with {edge_count} edges")]
    EdgeOutOfRange { edge: usize, edge_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("not a tree: edge {0}-{1} closes a cycle")]
    Cycle(usize, usize),
    #[error("edge-count mismatch: {0} vs {1} edges")]
    EdgeCountMismatch(usize, usize),
    #[error("not a bijection: {0}")]
    NotBijection(String),
    #[error("edge count {value} outside supported range {min}..={max}")]
    OutOfRange {
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("malformed nesting forest: {0}")]
    Nesting(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("certificate does not match the trees: {0}")]
    CertificateMismatch(String),
    #[error("certificate recheck failed: {0}")]
    RecheckFailed(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
