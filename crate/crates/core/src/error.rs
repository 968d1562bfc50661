use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),

    #[error("matrix dimensions must be positive, got {0}x{1}")]
    EmptyMatrix(usize, usize),

    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },

    #[error("non-finite entry at index {0}")]
    NonFinite(usize),

    #[error("singular matrix: pivot {pivot:e} below threshold {threshold:e} at column {column}")]
    SingularMatrix {
        column: usize,
        pivot: f64,
        threshold: f64,
    },

    #[error("direct sum of an empty block list")]
    EmptyDirectSum,

    #[error("invalid block: {0}")]
    InvalidBlock(String),

    #[error("hamiltonian has no blocks")]
    EmptySpec,

    #[error("block {block_id} is {phase}, expected UNBROKEN")]
    NotUnbroken {
        block_id: usize,
        phase: crate::spectra::PhaseClass,
    },

    #[error("block {block_id} is {phase}, expected BROKEN")]
    NotBroken {
        block_id: usize,
        phase: crate::spectra::PhaseClass,
    },

    #[error("continued fraction hits a pole: beta + f_{level}({lambda}) = {value:e}")]
    ContinuedFractionPole {
        level: usize,
        lambda: f64,
        value: f64,
    },

    #[error("invalid continued-fraction config: {0}")]
    InvalidCFrac(String),
}
