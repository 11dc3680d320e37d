use thiserror::Error;

/// Errors raised by the symbolic kernel and the verification front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic context mismatch: order {left:?} vs order {right:?}")]
    ContextMismatch { left: Option<u32>, right: Option<u32> },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("quantum binomial [{n} choose {k}] requires k <= n")]
    InvalidBinomial { n: u32, k: u32 },

    #[error("frobenius shift requires n >= 1, got {0}")]
    InvalidShift(u32),

    #[error("root-of-unity order must be positive")]
    InvalidOrder,

    #[error("monomial counting is only defined at generic q")]
    CountingUnderCyclotomic,

    #[error("invalid word {0:?}: expected a nonempty string over {{U, L}}")]
    InvalidWord(String),

    #[error("matrix {position} shares variables with the preceding product")]
    OverlappingSupport { position: usize },

    #[error("entry is not a single monomial; frobenius shift of matrices needs generator entries")]
    NonMonomialEntry,

    #[error("matrix is not a triangular generator")]
    NotTriangularGenerator,

    #[error("invalid root-of-unity configuration: n={n}, m={m} (valid m: {valid:?})")]
    InvalidRootOrder { n: u32, m: u32, valid: Vec<u32> },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
