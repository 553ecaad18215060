//! The admissibility inequality
//!
//! ```text
//! 2 sum_{0 < gamma < T1} |Gamma(1/(2 alpha) + i gamma / alpha)| + tail(alpha, T1)
//!     < Gamma(1/(2 alpha)) / 2
//! ```
//!
//! over the zeros of `L(s, chi_4)`, and the search for the largest `alpha`
//! satisfying it.

mod check;
mod report;
mod tail;

use thiserror::Error;

use crate::enclosure::{EnclosureError, DEFAULT_PRECISION};
use crate::special::SpecialError;
use crate::zeros::{SearchConfig, ZeroError};

pub use check::{check_alpha, finite_sum, find_max_alpha, find_max_alpha_from, gamma_square_tail_check, threshold, AlphaBracket};
pub use report::{AdmissibilityReport, Verdict};
pub use tail::{inverse_square_tail, tail_bound, tail_closed_form, theta1};

#[derive(Debug, Error)]
pub enum AdmissibilityError {
    #[error("invalid argument: {0}")]
    Domain(String),
    #[error("zero {index} has no sign-change certificate")]
    UncertifiedZero { index: usize },
    #[error("zero list height {list} differs from T1 = {config}")]
    HeightMismatch { list: f64, config: f64 },
    #[error("{found} zeros below {height}, outside the expected window [{lo}, {hi}]")]
    CountInconsistent { found: usize, height: f64, lo: f64, hi: f64 },
    #[error("seed alpha = {seed} is not admissible ({verdict})")]
    SeedNotAdmissible { seed: f64, verdict: Verdict },
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Enclosure(#[from] EnclosureError),
    #[error(transparent)]
    Zero(#[from] ZeroError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifierConfig {
    pub c1: f64,
    pub c2: f64,
    pub t1: f64,
    pub delta: f64,
    pub precision_bits: u32,
    pub grid_step: f64,
}

impl Default for VerifierConfig {
    fn default() -> Self {
        Self {
            c1: 0.315,
            c2: 6.445,
            t1: 1127.0,
            delta: 1e-8,
            precision_bits: DEFAULT_PRECISION,
            grid_step: 0.1,
        }
    }
}

impl VerifierConfig {
    pub fn validate(&self) -> Result<(), AdmissibilityError> {
        let bad = |m: String| Err(AdmissibilityError::Domain(m));
        if !(self.c1.is_finite() && self.c1 > 0.0 && self.c2.is_finite() && self.c2 > 0.0) {
            return bad(format!("C1 = {} and C2 = {} must be positive", self.c1, self.c2));
        }
        if !(self.t1.is_finite() && self.t1 >= 1.0) {
            return bad(format!("T1 = {} must be at least 1", self.t1));
        }
        if !(self.delta.is_finite() && self.delta > 0.0) {
            return bad(format!("delta = {} must be positive", self.delta));
        }
        if !(self.grid_step.is_finite() && self.grid_step > 0.0) {
            return bad(format!("grid step = {} must be positive", self.grid_step));
        }
        if !(53..=4096).contains(&self.precision_bits) {
            return bad(format!("precision {} must be within 53..=4096 bits", self.precision_bits));
        }
        Ok(())
    }

    pub fn search(&self) -> SearchConfig {
        SearchConfig {
            t1: self.t1,
            grid_step: self.grid_step,
            delta: self.delta,
            precision_bits: self.precision_bits,
            c1: self.c1,
            c2: self.c2,
            ..SearchConfig::default()
        }
    }
}
