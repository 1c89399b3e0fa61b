use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("matrix is not irreducible")]
    NotIrreducible,
    #[error("power iteration did not converge after {iterations} steps (gap {gap:e})")]
    NoConvergence { iterations: usize, gap: f64 },
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("trace {trace} is within the ambiguity band of +-2")]
    ToleranceAmbiguous { trace: f64 },
    #[error("mu = {0} is not above 2")]
    MuNotAboveTwo(f64),
    #[error("graph is not recessive")]
    NotRecessive,
    #[error("dominant graphs have no closed-form spectral radius")]
    DominantHasNoClosedForm,
    #[error("rational reconstruction of {0} failed")]
    RationalReconstructionFailed(f64),
    #[error("graph has a multiple edge (not small type)")]
    NotSmallType,
    #[error("embedding is non-orientable or inconsistent: {0}")]
    NonOrientableOrInconsistent(String),
    #[error("word is not in the semigroup G0(A,B): {0}")]
    NotInG0(String),
    #[error("root inclusion error {0:e} exceeds the requested tolerance")]
    PrecisionExhausted(f64),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by bad input rather than a failed internal check.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::InternalInconsistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
