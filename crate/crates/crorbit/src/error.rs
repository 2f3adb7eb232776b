//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Dynkin specification: {0}")]
    InvalidDynkin(String),

    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),

    #[error("unknown real form `{0}` (not in catalog)")]
    UnknownRealForm(String),

    #[error("invalid Satake data: {0}")]
    InvalidSatake(String),

    #[error("invalid Cayley set: {0}")]
    InvalidCayley(String),

    #[error("compactness of imaginary root {0:?} is not recorded")]
    MissingCompactness(Vec<i64>),

    #[error("multiplicity of real root {0:?} is not recorded")]
    MissingMultiplicity(Vec<i64>),

    #[error("root {0:?} is not {1}")]
    WrongRootClass(Vec<i64>, &'static str),

    #[error("enumeration bound exceeded: |W| = {order} > limit {limit}")]
    EnumerationBound { order: u64, limit: u64 },

    #[error("chamber is not fit for the parabolic set")]
    ChamberNotFit,

    #[error("parabolic sets are not nested: Q' must be contained in Q")]
    NotNested,

    #[error("schema error: {0}")]
    Schema(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Schema(_)
            | Error::InvalidDynkin(_)
            | Error::NotARoot(_)
            | Error::InvalidSatake(_)
            | Error::InvalidCayley(_)
            | Error::WrongRootClass(..)
            | Error::NotNested => 2,
            Error::UnknownRealForm(_)
            | Error::MissingCompactness(_)
            | Error::MissingMultiplicity(_) => 3,
            Error::EnumerationBound { .. } => 4,
            Error::Inconsistent(_) => 5,
            Error::ChamberNotFit | Error::Unsupported(_) => 2,
        }
    }
}
