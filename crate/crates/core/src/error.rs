use thiserror::Error;

use crate::mode::LatticeMode;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("torus area mismatch: {left} vs {right}")]
    AreaMismatch { left: f64, right: f64 },

    #[error("torus area must be positive and finite, got {0}")]
    InvalidArea(f64),

    #[error("degenerate plane: operands are zero or parallel")]
    DegeneratePlane,

    #[error("vector is not real-valued")]
    NotRealValued,

    #[error("vector does not satisfy the Klein anti-invariance constraints")]
    NotKlein,

    #[error("operands are not orthogonal (relative residual {0:e})")]
    NotOrthogonal(f64),

    #[error("index {index} is not valid for kind {kind}")]
    InvalidBasisIndex {
        kind: &'static str,
        index: LatticeMode,
    },

    #[error("index {0} is parallel to the fixed direction")]
    ParallelIndex(LatticeMode),

    #[error("pair {k}, {l} shares a coordinate; use sectional_klein instead")]
    PairHypothesis { k: LatticeMode, l: LatticeMode },

    #[error("out of domain: {0}")]
    Domain(String),

    #[error("not defined: {0}")]
    NotDefined(String),

    #[error("unknown preset '{0}'")]
    UnknownPreset(String),

    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
