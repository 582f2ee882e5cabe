use thiserror::Error;

use crate::algebra::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("simple-root index must be 1 or 2, got {0}")]
    RootIndex(usize),

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight {weight} has level {level}, above the fusion level {bound}")]
    LevelTooHigh { weight: Weight, level: i64, bound: u32 },

    #[error("charge of a configuration is not an integer (doubled charge {0})")]
    HalfIntegerCharge(i64),

    #[error("position {pos} is out of range for a word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("cannot reorder word of type {from} into type {to}")]
    IncompatibleTypes { from: String, to: String },

    #[error("invalid letter {0:?}")]
    InvalidLetter(char),

    #[error("could not parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("unknown representation label {0:?}")]
    UnknownLabel(String),

    #[error("graded decompositions have different depth cutoffs ({0} vs {1})")]
    CutoffMismatch(usize, usize),

    #[error("depth {requested} exceeds the oracle limit of {limit}")]
    ResourceCutoff { requested: usize, limit: usize },

    #[error("negative multiplicity {mult} for {weight} at depth {depth}")]
    NegativeMultiplicity { depth: usize, weight: Weight, mult: i64 },

    #[error("particle-shell truncation failed: {0}")]
    Truncation(String),

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
