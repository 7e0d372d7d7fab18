use alloc::string::String;
use core::fmt;

use crate::rootsys::Family;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Rank outside the range supported by the family.
    Rank { family: Family, rank: usize },
    /// Wrong number of coordinates for the family and rank.
    Length { expected: usize, found: usize },
    /// Staircase condition fails at `index` (0-based).
    NotDominant { family: Family, index: usize },
    /// Representation too large for an explicit weight table.
    Ceiling { dim: String, ceiling: u64 },
    /// Operation not defined for this family.
    Unsupported(&'static str),
    /// Bad partition or eigenvalue data for an isospectral model.
    Model(&'static str),
    /// Two independent routes disagreed. Always a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Rank { family, rank } => write!(
                f,
                "rank {rank} out of range for type {family} (requires rank >= {})",
                family.min_rank()
            ),
            Error::Length { expected, found } => {
                write!(f, "expected {expected} weight coordinates, found {found}")
            }
            Error::NotDominant { family, index } => write!(
                f,
                "weight is not dominant for type {family}: staircase fails at index {index}"
            ),
            Error::Ceiling { dim, ceiling } => write!(
                f,
                "dim V = {dim} exceeds the multiplicity-table ceiling {ceiling}"
            ),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::Model(what) => write!(f, "invalid isospectral model: {what}"),
            Error::Internal(what) => write!(f, "internal consistency failure: {what}"),
        }
    }
}

impl core::error::Error for Error {}
