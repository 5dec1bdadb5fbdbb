use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has loops; {0} requires a loop-free graph")]
    LoopsNotAllowed(&'static str),

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("permutation is not a bijection on 0..{0}")]
    NotABijection(usize),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("permutation {0:?} is not an automorphism of the graph")]
    NotAnAutomorphism(Vec<usize>),

    #[error("resource limit exceeded: {what} is {actual}, limit {limit}")]
    ResourceLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("premise rejected: {0}")]
    Premise(String),

    #[error("no negative value of the orbital chromatic polynomial at x0 for s <= {s_max}")]
    Exhausted {
        s_max: usize,
        /// `(s, OP(x0))` for every tried `s`, as exact rationals in `p/q` form.
        trajectory: Vec<(usize, String)>,
    },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
