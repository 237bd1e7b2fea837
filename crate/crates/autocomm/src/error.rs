//! Error type shared by every module of the crate.

use thiserror::Error;

/// Hard cap on the order of any constructed group.
pub const ORDER_LIMIT: usize = 10080;

/// Cap on the order of groups whose automorphism group or subgroup
/// lattice we enumerate exhaustively.
pub const ENUMERATION_LIMIT: usize = 48;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed table: {reason}")]
    MalformedTable { reason: String },

    #[error("table is not closed: entry at ({row}, {col}) is {value}, outside 0..{order}")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("table has no two-sided identity element")]
    NoIdentity,

    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },

    #[error("labels are invalid: {reason}")]
    InvalidLabels { reason: String },

    #[error("unknown group spec {spec:?}: {reason}")]
    UnknownSpec { spec: String, reason: String },

    #[error("order {order} exceeds the limit {limit}")]
    SizeLimitExceeded { order: usize, limit: usize },

    #[error("{inner:?} is not a normal subgroup of {outer:?}")]
    NotNormal { inner: String, outer: String },

    #[error("{inner:?} is not contained in {outer:?}")]
    NotContained { inner: String, outer: String },

    #[error("member set is not a subgroup: {reason}")]
    NotASubgroup { reason: String },

    #[error("subgroups do not form a chain: {reason}")]
    NotAChain { reason: String },

    #[error("hypothesis violated at element {label:?}: {reason}")]
    HypothesisViolated { label: String, reason: String },

    #[error("automorphism group is trivial; no prime divides its order")]
    TrivialAutGroup,

    #[error("degenerate instance: {reason}")]
    DegenerateInstance { reason: String },

    #[error("coset map is ill-defined at {label:?}; this indicates a bug in the absolute centralizer")]
    IllDefinedMap { label: String },

    #[error("parse error at position {position}: {message}")]
    ParseError { position: usize, message: String },

    #[error("unknown element label {label:?} in group {group:?}")]
    UnknownLabel { label: String, group: String },

    #[error("not a subgroup spec: {reason}")]
    NotASubgroupSpec { reason: String },

    #[error("search budget exceeded: {reason}")]
    BudgetExceeded { reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
