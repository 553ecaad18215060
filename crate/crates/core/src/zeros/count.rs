//! Consistency of a zero count with the explicit zero-counting formula
//!
//! ```text
//! | N(T) - (T / 2 pi) ln(2T / pi) + T / 2 pi | <= (C1 / 2) ln 4T + C2 / 2,   T >= 1,
//! ```
//!
//! for the zeros with `0 < gamma <= T`.

use std::f64::consts::PI;

use super::ZeroList;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CountConsistency {
    Consistent { expected: f64, half_width: f64, found: usize },
    Inconsistent { window: (f64, f64), found: usize },
}

impl CountConsistency {
    pub fn is_consistent(&self) -> bool {
        matches!(self, CountConsistency::Consistent { .. })
    }
}

/// Main term and half-width of the window at height `t`.
pub fn zero_count_window(t: f64, c1: f64, c2: f64) -> (f64, f64) {
    let main = t / (2.0 * PI) * (2.0 * t / PI).ln() - t / (2.0 * PI);
    let half = 0.5 * c1 * (4.0 * t).ln() + 0.5 * c2;
    (main, half)
}

pub fn count_consistency(list: &ZeroList, c1: f64, c2: f64) -> CountConsistency {
    let found = list.len();
    let (expected, half_width) = zero_count_window(list.height(), c1, c2);
    if (found as f64 - expected).abs() <= half_width {
        CountConsistency::Consistent {
            expected,
            half_width,
            found,
        }
    } else {
        CountConsistency::Inconsistent {
            window: (expected - half_width, expected + half_width),
            found,
        }
    }
}
