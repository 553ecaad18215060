//! Locating and certifying the zeros of `L(s, chi_4)` on the critical line.

mod count;
mod fast;
pub mod io;
mod rotated;
mod search;

use thiserror::Error;

use crate::enclosure::{Enclosure, EnclosureError};
use crate::special::SpecialError;

pub use count::{count_consistency, zero_count_window, CountConsistency};
pub use fast::FastRotated;
pub use rotated::{rotated_l, rotated_l_complex, rotated_sign, Sign};
pub use search::{certify_zero, find_zeros, recertify, SearchConfig};

#[derive(Debug, Error)]
pub enum ZeroError {
    #[error("sign of Z undecided on [{lo}, {hi}]: {detail}")]
    Undecided { lo: f64, hi: f64, detail: String },
    #[error("no sign change of Z between {lo} and {hi}")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("invalid argument: {0}")]
    Domain(String),
    #[error("invalid zero list: {0}")]
    InvalidList(String),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Enclosure(#[from] EnclosureError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Computed,
    Imported,
    ImportedRecertified,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Computed => "computed",
            Provenance::Imported => "imported",
            Provenance::ImportedRecertified => "imported-recertified",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "computed" => Some(Provenance::Computed),
            "imported" => Some(Provenance::Imported),
            "imported-recertified" => Some(Provenance::ImportedRecertified),
            _ => None,
        }
    }
}

/// An ordinate `gamma` known to lie in an enclosure. `certified` is set only
/// when a sign change of `Z` across the enclosure has been established.
#[derive(Debug, Clone)]
pub struct CertifiedZero {
    /// 1-based position in the list.
    pub index: usize,
    pub gamma: Enclosure,
    pub certified: bool,
}

/// Zeros with `0 < gamma`, sorted, up to a height.
///
/// A zero whose enclosure straddles the height is kept, so the invariant is
/// only `last.gamma.lo <= height`.
#[derive(Debug, Clone)]
pub struct ZeroList {
    zeros: Vec<CertifiedZero>,
    height: f64,
    provenance: Provenance,
    delta: Option<f64>,
}

impl ZeroList {
    pub fn new(
        zeros: Vec<CertifiedZero>,
        height: f64,
        provenance: Provenance,
        delta: Option<f64>,
    ) -> Result<Self, ZeroError> {
        if !(height.is_finite() && height > 0.0) {
            return Err(ZeroError::InvalidList(format!("height {height} must be positive")));
        }
        for (i, z) in zeros.iter().enumerate() {
            if z.index != i + 1 {
                return Err(ZeroError::InvalidList(format!("zero {} has index {}", i + 1, z.index)));
            }
            if !z.gamma.is_positive() {
                return Err(ZeroError::InvalidList(format!("zero {} is not positive", i + 1)));
            }
            if i > 0 && zeros[i - 1].gamma.hi() >= z.gamma.lo() {
                return Err(ZeroError::InvalidList(format!(
                    "zeros {} and {} are not strictly increasing",
                    i,
                    i + 1
                )));
            }
        }
        if let Some(last) = zeros.last() {
            if last.gamma.lo() > &height {
                return Err(ZeroError::InvalidList(format!(
                    "last zero {} lies above height {height}",
                    last.gamma.lo_f64()
                )));
            }
        }
        Ok(Self {
            zeros,
            height,
            provenance,
            delta,
        })
    }

    pub fn zeros(&self) -> &[CertifiedZero] {
        &self.zeros
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Half-width of the certification intervals, if any.
    pub fn delta(&self) -> Option<f64> {
        self.delta
    }

    pub fn all_certified(&self) -> bool {
        self.zeros.iter().all(|z| z.certified)
    }

    /// The zeros with `gamma.lo <= height`.
    pub fn truncated(&self, height: f64) -> Result<Self, ZeroError> {
        let zeros = self.zeros.iter().filter(|z| z.gamma.lo() <= &height).cloned().collect();
        Self::new(zeros, height, self.provenance, self.delta)
    }
}
