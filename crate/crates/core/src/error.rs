use thiserror::Error;

use crate::partition::Infeasible;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("malformed edge ({u}, {v}): {reason}")]
    MalformedEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },
    #[error("graph is not connected")]
    DisconnectedInput,
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("subset has {size} vertices, at least {min} required")]
    SubsetTooSmall { size: usize, min: usize },
    #[error("subset does not induce a connected subgraph")]
    DisconnectedSubset,
    #[error("k = {k} exceeds n = {n}")]
    KTooLarge { k: usize, n: usize },
    #[error("k = {k} is below the supported minimum {min}")]
    KTooSmall { k: usize, min: usize },
    #[error("n = {n} is below the supported minimum {min}")]
    NTooSmall { n: usize, min: usize },
    #[error("ranks have different shapes")]
    MismatchedShape,
    #[error("instance with n = {n} exceeds the oracle limit of {limit}")]
    InstanceTooLarge { n: usize, limit: usize },
    #[error("infeasible partition: {0}")]
    Infeasible(Infeasible),
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("{algo} needs k = {expected}, got {k}")]
    WrongK { algo: &'static str, k: usize, expected: usize },
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
