use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6: {msg} at byte {offset}")]
    Graph6 { offset: usize, msg: String },

    #[error("graph has {n} vertices, at most {max} are supported")]
    TooLarge { n: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("colouring is not a partition of the vertex set: {0}")]
    NotPartition(String),

    #[error("colouring is not proper: vertices {0} and {1} share a class")]
    Improper(usize, usize),

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("{what} refused: n = {n} exceeds the enumeration guard {limit}")]
    GuardExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("property `{0}` is not satisfied by any colouring of this graph")]
    Unsatisfiable(String),

    #[error("swap rejected: edge ({from}, {to}) is not lonely")]
    NotLonely { from: usize, to: usize },

    #[error("property `{0}` is not a singleton-friendly frame property on this graph")]
    PropertyRefused(String),

    #[error("unknown claim `{name}`; valid claims: {valid}")]
    UnknownClaim { name: String, valid: String },

    #[error("unknown suite `{name}`; valid suites: {valid}")]
    UnknownSuite { name: String, valid: String },
}
