//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition literal `{0}`: expected positive integers in weakly decreasing order, e.g. \"[3,1,1]\"")]
    InvalidPartition(String),

    #[error("weight mismatch: expected partitions of {expected}, found one of {found}")]
    WeightMismatch { expected: u32, found: u32 },

    #[error("{what} guard exceeded: limit {limit}, requested {requested}")]
    GuardExceeded {
        what: &'static str,
        limit: u32,
        requested: u32,
    },

    #[error("vanishing denominator: 1 - q^{power} = 0 for the supplied deformation parameter")]
    VanishingDenominator { power: u32 },

    #[error(
        "configuration contains a trivial profile (colength 0); unramified points are excluded"
    )]
    TrivialProfile,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
