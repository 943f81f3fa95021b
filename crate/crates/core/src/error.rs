use thiserror::Error;

/// Errors raised by the combinatorial engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid quantum characteristic e = {0} (must be 0 or at least 2)")]
    InvalidCharacteristic(i64),

    #[error("multicharge must have at least one entry")]
    EmptyMulticharge,

    #[error("multipartition has {found} components but the level is {expected}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("residue {0} is outside the residue set")]
    InvalidResidue(i64),

    #[error("operation requires e >= 2")]
    RequiresAffine,

    #[error("resource bound exceeded: {what} = {value} > {limit}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("beta-number set of component {component} has charge {found}, expected {expected}")]
    InconsistentCharge {
        component: usize,
        expected: i64,
        found: i64,
    },

    #[error("block is empty")]
    EmptyBlock,

    #[error("level window {top}..={bottom} contains no beads")]
    EmptyWindow { top: i64, bottom: i64 },

    #[error("node {0:?} is not a {1} node of residue {2}")]
    NodeStatus((usize, usize, usize), &'static str, i64),

    #[error("hypotheses of the divided-power branching theorem not certified: {0}")]
    NotCertified(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
