use thiserror::Error;

use crate::exact::ExactError;

/// Errors from the exact layer (zeta values, Hankel identities, classification).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("singular parameter: {0}")]
    SingularParameter(String),
    #[error("excluded parameter: {0}")]
    ExcludedParameter(String),
    #[error("boundary parameter: {0}")]
    BoundaryParameter(String),
    #[error("closed form only holds for ell in {{0, 1}} (got ell = {0})")]
    UnsupportedEll(u32),
    #[error("Desnanot-Jacobi recursion hit a vanishing determinant (ell = {ell}, n = {n})")]
    DegenerateRecursion { ell: u32, n: u32 },
    #[error("identity {identity} failed: direct = {direct}, closed = {closed}")]
    IdentityMismatch { identity: &'static str, direct: String, closed: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
