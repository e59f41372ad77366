use thiserror::Error;

use crate::weights::ParabolicMarking;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported rank k = {k}: the minimum rank is k = {min}")]
    UnsupportedRank { k: usize, min: usize },

    #[error("weight is not {marking}-dominant: {inequality}")]
    DominanceViolation {
        marking: ParabolicMarking,
        inequality: String,
    },

    #[error("rank mismatch: weight for k = {left} combined with weight for k = {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("structural check failed: {0}")]
    Structural(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
