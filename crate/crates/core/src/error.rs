use thiserror::Error;

use crate::grouping::Lattice;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {letter}{rank}: {reason}")]
    UnsupportedRootSystem {
        letter: String,
        rank: usize,
        reason: &'static str,
    },

    #[error("cannot parse root system name {0:?}")]
    BadRootSystemName(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight has rank {found}, expected {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("simple index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("lattice tag mismatch: {left:?} vs {right:?}")]
    TagMismatch { left: Lattice, right: Lattice },

    #[error("operator requires a {expected:?}-tagged element, got {found:?}")]
    WrongLattice { expected: Lattice, found: Lattice },

    #[error("cosets taken with respect to different parabolic subgroups")]
    ParabolicMismatch,

    #[error("invalid coset chain: {0}")]
    InvalidChain(String),

    #[error("no unique Bruhat-maximal lift: {0}")]
    NoUniqueLift(String),

    #[error("evaluation time {0} outside [0, 1]")]
    TimeOutOfRange(String),

    #[error("path invariant violated: {0}")]
    PathInvariant(String),

    #[error("path generation exceeded the cap of {0} paths")]
    PathCap(usize),

    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
