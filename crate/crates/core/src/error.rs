use thiserror::Error;

/// Failure modes shared by every layer of the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is singular at the pivot threshold")]
    Singular,
    #[error("matrix is not Hermitian (residual {0:e})")]
    NotHermitian(f64),
    #[error("map is not convolution invertible")]
    NotConvolutionInvertible,
    #[error("bialgebra has no antipode")]
    NotAHopfAlgebra,
    #[error("Hopf algebra is not cosemisimple (no normalized integral)")]
    NotCosemisimple,
    #[error("integral Gram form phi(e_i e_j) is singular")]
    SingularGramForm,
    #[error("unitarization failed: {0}")]
    UnitarizationFailed(String),
    #[error("star structure incompatible: {0}")]
    StarCompatFailed(String),
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("not a Singer pair: {0}")]
    NotASingerPair(String),
    #[error("closed-form antipode disagrees with the generic one (residual {0:e})")]
    AntipodeMismatch(f64),
    #[error("construction paths disagree: {0}")]
    PathMismatch(String),
    #[error("a star structure is required")]
    MissingStar,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}
