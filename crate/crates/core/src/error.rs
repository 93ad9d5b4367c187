use thiserror::Error;

/// Errors raised by the group, polynomial and Hecke algebra operations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid signed permutation window {window:?}: {reason}")]
    InvalidWindow { window: Vec<i64>, reason: String },

    #[error("rank {0} exceeds the supported maximum {max}", max = crate::perm::MAX_RANK)]
    RankTooLarge(usize),

    #[error("generator {generator} is not defined in rank {rank}")]
    GeneratorOutOfRange { generator: String, rank: usize },

    #[error("cannot restrict {element} to rank {rank}: it moves an index above {rank}")]
    NotRestrictable { element: String, rank: usize },

    #[error("{element} does not lie in the parabolic subgroup B_{n} x S_{k}")]
    NotInParabolic { element: String, n: usize, k: usize },

    #[error("{element} is not a good involution")]
    NotGood { element: String },

    #[error("{element} is not an involution of the symmetric group")]
    NotSymmetricInvolution { element: String },

    #[error("{members:?} is not a separated {k}-set")]
    NotSeparated { k: usize, members: Vec<usize> },

    #[error("predecessor undefined for {element}: {reason}")]
    NoPredecessor { element: String, reason: String },

    #[error("non-integral exponent for {element}: {reason}")]
    OddExponent { element: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
