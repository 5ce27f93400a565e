use thiserror::Error;

use crate::game::{Bound, ConfigurationGraph, VertexStatus};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal rank {rank} for family {family}")]
    IllegalRank { family: String, rank: usize },

    #[error("vertex {vertex} out of range 1..={rank}")]
    IndexOutOfRange { vertex: usize, rank: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("illegal move at vertex {vertex}: status is {status}")]
    IllegalMove { vertex: usize, status: VertexStatus },

    #[error("board mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("configuration length {got} does not match rank {rank}")]
    ShapeMismatch { got: usize, rank: usize },

    #[error("negative chip count at vertex {0}")]
    NegativeChips(usize),

    #[error("game stopped after {steps} moves: {bound} reached")]
    Diverged { bound: Bound, steps: usize },

    #[error("exploration stopped at the {bound} bound with {} nodes", .partial.len())]
    LimitExceeded {
        bound: Bound,
        partial: Box<ConfigurationGraph>,
    },

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("letter {0} lies outside the parabolic subset")]
    LetterOutsideJ(usize),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("invalid move at step {step} (vertex {vertex})")]
    InvalidMoveAt { step: usize, vertex: usize },

    #[error("element of play {0:?} is not a minimal coset representative")]
    NotMinRep(Vec<usize>),

    #[error("diagram {0} is not simply laced")]
    NotSimplyLaced(String),

    #[error("the base game does not terminate")]
    NonTerminating,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("group has more than {0} elements")]
    GroupTooLarge(usize),

    #[error("word {0:?} is not Grassmannian for the given descent")]
    NotGrassmannian(Vec<usize>),

    #[error("invalid play at step {step}: {reason}")]
    InvalidPlay { step: usize, reason: String },

    #[error("no cell available for step {step}")]
    PlacementImpossible { step: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{kind} has no {format} rendering")]
    UnsupportedFormat { kind: String, format: String },
}
