//! Rigorous special functions: log Gamma, |Gamma| on vertical lines, the
//! closed-form |Gamma| majorant used for zero tails, and Hurwitz zeta.

pub mod bernoulli;
pub mod gamma;
pub mod hurwitz;

pub use gamma::{anderson_bound, gamma_abs_vertical, gamma_real, log_gamma, stirling_principal, StirlingParams};
pub use hurwitz::{hurwitz_zeta, EulerMaclaurinParams};

use crate::enclosure::EnclosureError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpecialError {
    #[error("pole: {0}")]
    Pole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precision exhausted: {0}")]
    Precision(String),
    #[error(transparent)]
    Enclosure(#[from] EnclosureError),
}
