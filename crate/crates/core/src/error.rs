use thiserror::Error;

use crate::rootsys::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown algebra type `{0}`")]
    UnknownType(String),

    #[error("rank {rank} is out of range for family {family}")]
    RankOutOfRange { family: char, rank: usize },

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("variable index {index} out of range for rank {rank}")]
    VariableOutOfRange { index: usize, rank: usize },

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error(
        "tensor product {left} x {right} exceeds the weight budget \
         ({weights} weights > {budget})"
    )]
    BudgetExceeded {
        left: Weight,
        right: Weight,
        weights: u128,
        budget: u64,
    },

    #[error("non-integral coefficient in a[{j},{k}]")]
    NonIntegral { j: usize, k: usize },

    #[error("operator entry a[{j},{k}] is not populated")]
    MissingOperatorEntry { j: usize, k: usize },

    #[error("the Calogero-Sutherland operator requires a simply-laced algebra")]
    NotSimplyLaced,

    #[error("{algebra} has non-integral energies, so its operator has no integral form")]
    NonIntegralOperator { algebra: String },

    #[error("fixture: {0}")]
    Fixture(String),

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}
