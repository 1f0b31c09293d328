use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("vertices of a pair must be distinct (got {0} twice)")]
    RepeatedVertex(usize),

    #[error("{a}{b} is not an edge")]
    NotAnEdge { a: usize, b: usize },

    #[error("{what} exceeds the supported limit ({size} > {limit})")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("{0} is outside the range where the closed form is stated")]
    OutOfStatedRange(String),

    #[error("polynomial is not divisible by x - 1 (remainder {0})")]
    NonzeroRemainder(String),

    #[error("coefficient of x^{0} is negative")]
    NegativeCoefficient(usize),

    #[error("malformed double occurrence word: {0}")]
    MalformedWord(String),

    #[error("vertices {a} and {b} are not interlaced")]
    NotInterlaced { a: usize, b: usize },

    #[error("digraph is not connected")]
    Disconnected,

    #[error("digraph is not balanced: {0}")]
    Unbalanced(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
