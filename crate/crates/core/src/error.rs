use num_bigint::BigUint;
use thiserror::Error;

/// Errors raised by the library. Points in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed cycle notation at byte {position}: {reason}")]
    MalformedCycle { position: usize, reason: String },

    #[error("point {point} is out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {point} appears more than once")]
    DuplicatePointInCycle { point: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("generator list is empty")]
    EmptyGeneratorList,

    #[error("group order {order} exceeds element cap {cap}")]
    OrderExceedsCap { order: BigUint, cap: u64 },

    #[error("group is not transitive")]
    NotTransitive,

    #[error("points must be distinct (got {0} twice)")]
    EqualPoints(usize),

    #[error("the group is trivial")]
    TrivialGroup,

    #[error("subset size {size} is not in 1..={degree}")]
    BadSubsetSize { size: usize, degree: usize },

    #[error("search budget exceeded at k = {k}")]
    SearchBudgetExceeded { k: usize },

    #[error("orbit average is not an integer: {sum} / {order}")]
    NonIntegerAverage { sum: BigUint, order: BigUint },

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("graph has no edges")]
    NoEdges,

    #[error("edge {edge:?} has a vertex outside 1..={vertices}")]
    EdgeOutOfRange { edge: Vec<usize>, vertices: usize },

    #[error("edge {edge:?} is not a {size}-subset")]
    EdgeNotAnLSubset { edge: Vec<usize>, size: usize },

    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
