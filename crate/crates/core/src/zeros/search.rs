//! Grid scan, refinement and certification of zeros of `Z`.

use rayon::prelude::*;
use rug::float::Round;
use rug::Float;
use std::f64::consts::PI;

use super::count::count_consistency;
use super::fast::FastRotated;
use super::rotated::rotated_sign;
use super::{CertifiedZero, Provenance, ZeroError, ZeroList};
use crate::enclosure::{Enclosure, DEFAULT_PRECISION};

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub t1: f64,
    pub grid_step: f64,
    /// Half-width of the certification interval around each zero.
    pub delta: f64,
    pub precision_bits: u32,
    pub c1: f64,
    pub c2: f64,
    /// Rounds of finer re-scanning when the count falls outside the window.
    pub max_rescans: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            t1: 1127.0,
            grid_step: 0.1,
            delta: 1e-8,
            precision_bits: DEFAULT_PRECISION,
            c1: 0.315,
            c2: 6.445,
            max_rescans: 2,
        }
    }
}

impl SearchConfig {
    pub fn with_height(t1: f64) -> Self {
        Self {
            t1,
            ..Self::default()
        }
    }
}

fn certify_at(t: &Float, delta: f64, prec: u32) -> Result<Enclosure, ZeroError> {
    if !(delta.is_finite() && delta > 0.0) {
        return Err(ZeroError::Domain(format!("delta = {delta} must be positive")));
    }
    if !(t.is_finite() && *t > 0) {
        return Err(ZeroError::Domain(format!("t = {t} must be positive")));
    }
    let lo = Float::with_val_round(prec, t - delta, Round::Down).0;
    let hi = Float::with_val_round(prec, t + delta, Round::Up).0;
    if lo < 0 {
        return Err(ZeroError::Domain(format!("t - delta < 0 at t = {t}")));
    }
    let sign = |x: &Float| {
        rotated_sign(&Enclosure::from_float(prec, x)).map_err(|e| match e {
            ZeroError::Undecided { detail, .. } => ZeroError::Undecided {
                lo: lo.to_f64(),
                hi: hi.to_f64(),
                detail,
            },
            e => e,
        })
    };
    if sign(&lo)? == sign(&hi)? {
        return Err(ZeroError::NoSignChange {
            lo: lo.to_f64(),
            hi: hi.to_f64(),
        });
    }
    Ok(Enclosure::new(lo, hi)?)
}

/// Certifies a zero in `[t - delta, t + delta]` by a sign change of `Z` at the
/// endpoints, evaluated with `prec`-bit enclosures.
pub fn certify_zero(t: f64, delta: f64, prec: u32) -> Result<Enclosure, ZeroError> {
    certify_at(&Float::with_val(prec.max(53), t), delta, prec)
}

fn grid(a: f64, b: f64, step: f64) -> Vec<f64> {
    let n = ((b - a) / step).ceil() as usize;
    let mut pts: Vec<f64> = (0..n).map(|i| a + i as f64 * step).filter(|&x| x < b).collect();
    pts.push(b);
    pts
}

/// Refined sign changes of `Z` on `[a, b]` scanned at `step`.
fn locate(fz: &FastRotated, a: f64, b: f64, step: f64, tol: f64) -> Vec<f64> {
    let pts = grid(a, b, step);
    let vals: Vec<f64> = pts.par_iter().with_min_len(64).map(|&t| fz.eval(t)).collect();
    let brackets: Vec<(f64, f64)> = (1..pts.len())
        .filter(|&i| (vals[i - 1] < 0.0) != (vals[i] < 0.0))
        .map(|i| (pts[i - 1], pts[i]))
        .collect();
    brackets.par_iter().map(|&(l, r)| fz.bisect(l, r, tol)).collect()
}

fn mean_spacing(t: f64) -> f64 {
    let l = (2.0 * t / PI).ln();
    if l > 0.0 {
        2.0 * PI / l
    } else {
        f64::INFINITY
    }
}

/// Gaps between consecutive located zeros that are long enough to hide a
/// missed pair.
fn flagged_gaps(roots: &[f64], t1: f64) -> Vec<(f64, f64)> {
    let mut edges = Vec::with_capacity(roots.len() + 2);
    edges.push(0.0);
    edges.extend_from_slice(roots);
    edges.push(t1);
    edges
        .windows(2)
        .filter(|w| w[1] - w[0] > 1.5 * mean_spacing(0.5 * (w[0] + w[1])))
        .map(|w| (w[0], w[1]))
        .collect()
}

fn merge(mut roots: Vec<f64>, tol: f64) -> Vec<f64> {
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|b, a| (*b - *a).abs() <= 1e3 * tol);
    roots
}

/// Finds and certifies the zeros of `Z` on `(0, t1]`.
///
/// Runs on the current rayon pool. The output does not depend on its size.
pub fn find_zeros(cfg: &SearchConfig) -> Result<ZeroList, ZeroError> {
    if !(cfg.t1.is_finite() && cfg.t1 >= 1.0) {
        return Err(ZeroError::Domain(format!("T1 = {} must be at least 1", cfg.t1)));
    }
    if !(cfg.grid_step.is_finite() && cfg.grid_step > 0.0) {
        return Err(ZeroError::Domain(format!("grid step {} must be positive", cfg.grid_step)));
    }
    if !(cfg.delta.is_finite() && cfg.delta > 0.0) {
        return Err(ZeroError::Domain(format!("delta = {} must be positive", cfg.delta)));
    }
    let fz = FastRotated::new(cfg.t1);
    let tol = (cfg.delta * 1e-3).max(cfg.t1 * 8.0 * f64::EPSILON);
    let mut step = cfg.grid_step;
    let mut roots = locate(&fz, 0.0, cfg.t1, step, tol);
    for _ in 0..cfg.max_rescans {
        let probe = provisional(&roots, cfg.t1)?;
        if count_consistency(&probe, cfg.c1, cfg.c2).is_consistent() {
            break;
        }
        step /= 4.0;
        let extra: Vec<f64> = flagged_gaps(&roots, cfg.t1)
            .into_iter()
            .flat_map(|(a, b)| locate(&fz, a, b, step, tol))
            .collect();
        roots.extend(extra);
        roots = merge(roots, tol);
    }

    let certified: Vec<Result<Enclosure, ZeroError>> = roots
        .par_iter()
        .map(|&t| certify_zero(t, cfg.delta, cfg.precision_bits))
        .collect();
    let mut zeros = Vec::with_capacity(certified.len());
    for (i, c) in certified.into_iter().enumerate() {
        zeros.push(CertifiedZero {
            index: i + 1,
            gamma: c?,
            certified: true,
        });
    }
    ZeroList::new(zeros, cfg.t1, Provenance::Computed, Some(cfg.delta))
}

fn provisional(roots: &[f64], t1: f64) -> Result<ZeroList, ZeroError> {
    let zeros = roots
        .iter()
        .enumerate()
        .map(|(i, &t)| CertifiedZero {
            index: i + 1,
            gamma: Enclosure::point(53, t),
            certified: false,
        })
        .collect();
    ZeroList::new(zeros, t1, Provenance::Computed, None)
}

/// Re-certifies every zero of a list around its midpoint.
pub fn recertify(list: &ZeroList, delta: f64, prec: u32) -> Result<ZeroList, ZeroError> {
    let certified: Vec<Result<Enclosure, ZeroError>> = list
        .zeros()
        .par_iter()
        .map(|z| certify_at(&z.gamma.mid(), delta, prec))
        .collect();
    let mut zeros = Vec::with_capacity(certified.len());
    for (z, c) in list.zeros().iter().zip(certified) {
        zeros.push(CertifiedZero {
            index: z.index,
            gamma: c?,
            certified: true,
        });
    }
    let provenance = match list.provenance() {
        Provenance::Computed => Provenance::Computed,
        _ => Provenance::ImportedRecertified,
    };
    ZeroList::new(zeros, list.height(), provenance, Some(delta))
}
