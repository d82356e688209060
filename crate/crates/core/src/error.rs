use thiserror::Error;

use crate::ring::MultiDegree;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("generator `{generator}` is not multihomogeneous: it has terms of degrees {first} and {second}")]
    Inhomogeneous {
        generator: String,
        first: MultiDegree,
        second: MultiDegree,
    },

    #[error("local cohomology H^{index}_B at twist {twist} did not stabilize for t in {t_start}..={t_cap} (values {values:?}); raise the cap")]
    StabilizationNotReached {
        index: usize,
        twist: MultiDegree,
        t_start: u32,
        t_cap: u32,
        values: Vec<u64>,
    },

    #[error("codimension mismatch: expected {expected}, the saturated ideal has codimension {actual}")]
    CodimensionMismatch { expected: usize, actual: usize },

    #[error("degenerate cone: generators are linearly dependent")]
    DegenerateCone,

    #[error("inconsistent form degrees in block {block}: {first} vs {second}")]
    InconsistentFormDegrees { block: usize, first: u32, second: u32 },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("exponent overflow")]
    ExponentOverflow,
}
