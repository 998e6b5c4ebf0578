use thiserror::Error;

use crate::partition::{Cell, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition token {token:?}: {reason}")]
    InvalidToken { token: String, reason: &'static str },

    #[error("parts not weakly decreasing: {prev} is followed by {next}")]
    NotDecreasing { prev: usize, next: usize },

    #[error("partition parts must be positive")]
    ZeroPart,

    #[error("cell {cell} lies outside the diagram of {partition}")]
    CellOutside { cell: Cell, partition: Partition },

    #[error("{operation} requires a nonempty partition")]
    EmptyPartition { operation: &'static str },

    #[error("{what}: size {n} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("size mismatch: |{left}| != |{right}|")]
    SizeMismatch { left: Partition, right: Partition },

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("unknown output format {0:?}")]
    UnknownFormat(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
