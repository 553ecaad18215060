use rayon::prelude::*;

use super::report::{AdmissibilityReport, Verdict};
use super::tail::{inverse_square_tail, tail_bound, tail_closed_form, theta1};
use super::{AdmissibilityError, VerifierConfig};
use crate::enclosure::Enclosure;
use crate::special::{gamma_abs_vertical, gamma_real};
use crate::zeros::{count_consistency, CountConsistency, ZeroList};

type Result<T> = std::result::Result<T, AdmissibilityError>;

fn require_certified(list: &ZeroList) -> Result<()> {
    match list.zeros().iter().find(|z| !z.certified) {
        Some(z) => Err(AdmissibilityError::UncertifiedZero { index: z.index }),
        None => Ok(()),
    }
}

fn alpha_enclosure(alpha: f64, prec: u32) -> Result<Enclosure> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(AdmissibilityError::Domain(format!("alpha = {alpha} must be positive")));
    }
    Ok(Enclosure::point(prec, alpha))
}

/// `Gamma(1/(2 alpha)) / 2`.
pub fn threshold(alpha: &Enclosure) -> Result<Enclosure> {
    Ok(gamma_real(&alpha.mul_int(2).recip()?)?.div_int(2))
}

/// `2 sum |Gamma(1/(2 alpha) + i gamma / alpha)|` over the list, added in
/// index order.
pub fn finite_sum(alpha: &Enclosure, list: &ZeroList) -> Result<Enclosure> {
    require_certified(list)?;
    if !alpha.is_positive() {
        return Err(AdmissibilityError::Domain("alpha must be positive".into()));
    }
    let a = alpha.mul_int(2).recip()?;
    let terms: Vec<_> = list
        .zeros()
        .par_iter()
        .map(|z| gamma_abs_vertical(&a, &z.gamma.div(alpha)?))
        .collect();
    let mut sum = Enclosure::zero(alpha.prec());
    for t in terms {
        sum = &sum + &t?;
    }
    Ok(sum.mul_int(2))
}

fn require_usable(list: &ZeroList, config: &VerifierConfig) -> Result<CountConsistency> {
    config.validate()?;
    if list.height() != config.t1 {
        return Err(AdmissibilityError::HeightMismatch {
            list: list.height(),
            config: config.t1,
        });
    }
    require_certified(list)?;
    match count_consistency(list, config.c1, config.c2) {
        CountConsistency::Inconsistent { window, found } => Err(AdmissibilityError::CountInconsistent {
            found,
            height: list.height(),
            lo: window.0,
            hi: window.1,
        }),
        c => Ok(c),
    }
}

/// Evaluates both sides of the inequality at `alpha`.
pub fn check_alpha(alpha: f64, list: &ZeroList, config: &VerifierConfig) -> Result<AdmissibilityReport> {
    let count = require_usable(list, config)?;
    let p = config.precision_bits;
    let a = alpha_enclosure(alpha, p)?;
    let th = theta1(config.t1, config.c1, config.c2, p)?;
    let sum = finite_sum(&a, list)?;
    let tail = tail_bound(&a, config.t1, &th)?;
    let closed = tail_closed_form(&a, config.t1, &th)?;
    let thr = threshold(&a)?;
    let verdict = Verdict::decide(&sum, &tail, &thr);
    let (count_expected, count_half_width) = match count {
        CountConsistency::Consistent {
            expected, half_width, ..
        } => (expected, half_width),
        CountConsistency::Inconsistent { .. } => unreachable!("rejected above"),
    };
    Ok(AdmissibilityReport {
        alpha,
        t1: config.t1,
        c1: config.c1,
        c2: config.c2,
        delta: list.delta().unwrap_or(config.delta),
        precision_bits: p,
        grid_step: config.grid_step,
        zero_count: list.len(),
        provenance: list.provenance(),
        count_expected,
        count_half_width,
        theta1: th,
        finite_sum: sum,
        tail,
        tail_closed_form: closed,
        threshold: thr,
        verdict,
    })
}

/// Result of the search for the largest admissible `alpha`.
#[derive(Debug, Clone)]
pub struct AlphaBracket {
    pub alpha_low: f64,
    pub alpha_high: f64,
    /// Verdict at `alpha_high`; `Undecided` is treated as not admissible.
    pub high_verdict: Verdict,
    pub resolution: f64,
    /// Every tested `alpha` with its verdict, in test order.
    pub evidence: Vec<(f64, Verdict)>,
}

impl AlphaBracket {
    /// True when no tested admissible `alpha` exceeds a tested non-admissible one.
    pub fn evidence_is_monotone(&self) -> bool {
        let max_ok = self.evidence.iter().filter(|e| e.1 == Verdict::Admissible).map(|e| e.0).fold(f64::MIN, f64::max);
        let min_bad = self.evidence.iter().filter(|e| e.1 != Verdict::Admissible).map(|e| e.0).fold(f64::MAX, f64::min);
        max_ok < min_bad
    }
}

/// `k * resolution`, computed as `k / (1 / resolution)` when that is an
/// integer so that decimal resolutions give the nearest double.
fn lattice(k: u64, resolution: f64) -> f64 {
    let inv = resolution.recip();
    if resolution <= 1.0 && (inv - inv.round()).abs() < 1e-9 * inv {
        k as f64 / inv.round()
    } else {
        k as f64 * resolution
    }
}

pub fn find_max_alpha(list: &ZeroList, config: &VerifierConfig, resolution: f64) -> Result<AlphaBracket> {
    find_max_alpha_from(list, config, resolution, 4.0)
}

/// Bisects over multiples of `resolution`, starting from an admissible `seed`
/// and doubling until a non-admissible upper end is found.
pub fn find_max_alpha_from(list: &ZeroList, config: &VerifierConfig, resolution: f64, seed: f64) -> Result<AlphaBracket> {
    if !(resolution.is_finite() && resolution > 0.0) {
        return Err(AdmissibilityError::Domain(format!("resolution {resolution} must be positive")));
    }
    alpha_enclosure(seed, 53)?;
    require_usable(list, config)?;
    let mut evidence = Vec::new();
    let mut test = |k: u64| -> Result<Verdict> {
        let alpha = lattice(k, resolution);
        let v = check_alpha(alpha, list, config)?.verdict;
        evidence.push((alpha, v));
        Ok(v)
    };
    let mut lo = ((seed / resolution).floor() as u64).max(1);
    let v = test(lo)?;
    if v != Verdict::Admissible {
        return Err(AdmissibilityError::SeedNotAdmissible {
            seed: lattice(lo, resolution),
            verdict: v,
        });
    }
    let mut hi = lo * 2;
    let mut high_verdict = loop {
        let v = test(hi)?;
        if v != Verdict::Admissible {
            break v;
        }
        lo = hi;
        hi = hi.checked_mul(2).filter(|&h| h < 1 << 52).ok_or_else(|| {
            AdmissibilityError::Domain("no inadmissible alpha found while doubling".into())
        })?;
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let v = test(mid)?;
        if v == Verdict::Admissible {
            lo = mid;
        } else {
            hi = mid;
            high_verdict = v;
        }
    }
    Ok(AlphaBracket {
        alpha_low: lattice(lo, resolution),
        alpha_high: lattice(hi, resolution),
        high_verdict,
        resolution,
        evidence,
    })
}

/// Encloses `sum_{gamma > 0} gamma^-2`: the list exactly plus `[0, tail]`
/// for the zeros above its height.
pub fn gamma_square_tail_check(list: &ZeroList, config: &VerifierConfig) -> Result<Enclosure> {
    require_certified(list)?;
    let p = config.precision_bits;
    let mut sum = Enclosure::zero(p);
    for z in list.zeros() {
        sum = &sum + &z.gamma.sqr().recip()?;
    }
    let th = theta1(list.height(), config.c1, config.c2, p)?;
    let tail = inverse_square_tail(list.height(), &th)?;
    let tail = Enclosure::new(rug::Float::new(p), tail.hi().clone())?;
    Ok(&sum + &tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::{CertifiedZero, Provenance};

    const P: u32 = 128;

    #[test]
    fn threshold_at_knife_edge() {
        let t = threshold(&Enclosure::parse(P, "20.40442").unwrap()).unwrap();
        assert!(t.lo() > &20.1276649);
        assert!(t.width() < 1e-30);
    }

    #[test]
    fn lattice_is_exact_for_decimals() {
        assert_eq!(lattice(2040442, 1e-5), 20.40442);
        assert_eq!(lattice(2040443, 1e-5), 20.40443);
        assert_eq!(lattice(7, 2.0), 14.0);
    }

    fn first_zero(certified: bool) -> ZeroList {
        let g = Enclosure::parse(P, "6.020948904697596654902511521612085868864").unwrap();
        let z = CertifiedZero {
            index: 1,
            gamma: g,
            certified,
        };
        ZeroList::new(vec![z], 8.0, Provenance::Computed, None).unwrap()
    }

    #[test]
    fn empty_and_uncertified() {
        let empty = ZeroList::new(vec![], 6.0, Provenance::Computed, None).unwrap();
        let s = finite_sum(&Enclosure::point(P, 4.0), &empty).unwrap();
        assert!(s.is_point() && s.contains_f64(0.0));
        assert!(matches!(
            finite_sum(&Enclosure::point(P, 4.0), &first_zero(false)),
            Err(AdmissibilityError::UncertifiedZero { index: 1 })
        ));
        let cfg = VerifierConfig::default();
        let g = gamma_square_tail_check(&empty, &cfg).unwrap();
        assert!(g.hi() > &0 && g.hi().is_finite());
    }

    #[test]
    fn inverse_square_first_term() {
        let g = gamma_square_tail_check(&first_zero(true), &VerifierConfig::default()).unwrap();
        assert!(g.hi() > &(1.0 / (6.0209489f64 * 6.0209489)));
    }

    #[test]
    fn height_must_match() {
        let cfg = VerifierConfig::default();
        assert!(matches!(
            check_alpha(4.0, &first_zero(true), &cfg),
            Err(AdmissibilityError::HeightMismatch { .. })
        ));
        let cfg = VerifierConfig { t1: 8.0, ..cfg };
        assert!(check_alpha(0.0, &first_zero(true), &cfg).is_err());
        assert!(check_alpha(4.0, &first_zero(true), &cfg).is_ok());
    }
}
