//! Exact spectral zeta values, Hankel determinant identities and complex-zero
//! classification for the regular Coulomb wave function `F_L(eta, rho)`.
//!
//! Everything except [`numeric`] works in exact rational arithmetic.

pub mod classify;
pub mod cli;
pub mod error;
pub mod exact;
pub mod hankel;
pub mod numeric;
pub mod output;
pub mod suite;
pub mod zeta;

pub use classify::{classify, hurwitz_counts, HurwitzCounts, ZeroClassification};
pub use error::{Error, Result};
pub use exact::{det_exact, ExactMatrix, ExactRational};
pub use zeta::{CoulombParams, RayleighTable, ZetaTable};
