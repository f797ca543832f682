use thiserror::Error;

/// Errors raised by the algebraic routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported Dynkin type {}", type_label(.series, *.rank))]
    InvalidType { series: String, rank: usize },
    #[error("weight {0:?} is not a root, so it has no coroot")]
    NotACoroot(Vec<i64>),
    #[error("rank {0} exceeds the Weyl group enumeration cap of 6")]
    RankTooLarge(usize),
    #[error("parabolic subgroup generated by nodes {0:?} is infinite")]
    InfiniteParabolic(Vec<usize>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("division is not exact")]
    NonExactDivision,
    #[error("element is not invariant under the Weyl group action")]
    NotInvariant,
    #[error("points {0:?} and {1:?} coincide on T/W and cannot be separated")]
    PointsNotSeparated(Vec<i64>, Vec<i64>),
    #[error("truncation {0} is too short for this computation")]
    InsufficientTruncation(usize),
    #[error("ideal with {0} generators is not a maximal ideal given by linear generators")]
    IdealTooComplex(usize),
    #[error("l = {l} is not admissible for this root datum")]
    InvalidL { l: i64 },
    #[error("weight {got:?} has the wrong rank (expected {expected})")]
    RankMismatch { expected: usize, got: Vec<i64> },
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

fn type_label(series: &str, rank: usize) -> String {
    if rank == 0 {
        series.to_string()
    } else {
        format!("{series}{rank}")
    }
}
