use std::fmt;

use crate::enclosure::Enclosure;
use crate::zeros::Provenance;

use super::AlphaBracket;

/// Significant digits of every printed endpoint.
pub const REPORT_DIGITS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Admissible,
    NotAdmissible,
    Undecided,
}

impl Verdict {
    /// Admissible when `sum + tail < threshold` holds between enclosures,
    /// not admissible when the finite sum alone exceeds the threshold.
    pub fn decide(finite_sum: &Enclosure, tail: &Enclosure, threshold: &Enclosure) -> Self {
        if (finite_sum + tail).hi() < threshold.lo() {
            Verdict::Admissible
        } else if finite_sum.lo() > threshold.hi() {
            Verdict::NotAdmissible
        } else {
            Verdict::Undecided
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Admissible => "Admissible",
            Verdict::NotAdmissible => "NotAdmissible",
            Verdict::Undecided => "Undecided",
        })
    }
}

#[derive(Debug, Clone)]
pub struct AdmissibilityReport {
    pub alpha: f64,
    pub t1: f64,
    pub c1: f64,
    pub c2: f64,
    pub delta: f64,
    pub precision_bits: u32,
    pub grid_step: f64,
    pub zero_count: usize,
    pub provenance: Provenance,
    pub count_expected: f64,
    pub count_half_width: f64,
    pub theta1: Enclosure,
    pub finite_sum: Enclosure,
    /// Enclosure of the bound for the zeros above `t1`; its upper end is used.
    pub tail: Enclosure,
    /// The compact form of the tail bound where it applies.
    pub tail_closed_form: Option<Enclosure>,
    pub threshold: Enclosure,
    pub verdict: Verdict,
}

impl AdmissibilityReport {
    pub fn tail_upper(&self) -> &rug::Float {
        self.tail.hi()
    }

    /// Recomputes the verdict from the stored enclosures.
    pub fn recheck(&self) -> Verdict {
        Verdict::decide(&self.finite_sum, &self.tail, &self.threshold)
    }

    /// Lower bound for `threshold - finite_sum - tail`.
    pub fn margin(&self) -> Enclosure {
        &self.threshold - &(&self.finite_sum + &self.tail)
    }

    /// Flat `key = value` text. Lower endpoints are rounded down and upper
    /// endpoints up.
    pub fn to_key_value(&self) -> String {
        let mut kv: Vec<(String, String)> = vec![
            ("alpha".into(), self.alpha.to_string()),
            ("t1".into(), self.t1.to_string()),
            ("c1".into(), self.c1.to_string()),
            ("c2".into(), self.c2.to_string()),
            ("delta".into(), format!("{:e}", self.delta)),
            ("precision_bits".into(), self.precision_bits.to_string()),
            ("grid_step".into(), self.grid_step.to_string()),
            ("zero_count".into(), self.zero_count.to_string()),
            ("zero_provenance".into(), self.provenance.as_str().to_string()),
            ("count_expected".into(), format!("{:.6}", self.count_expected)),
            ("count_half_width".into(), format!("{:.6}", self.count_half_width)),
        ];
        let interval = |kv: &mut Vec<(String, String)>, name: &str, e: &Enclosure| {
            kv.push((format!("{name}_lo"), e.lo_string(REPORT_DIGITS)));
            kv.push((format!("{name}_hi"), e.hi_string(REPORT_DIGITS)));
        };
        interval(&mut kv, "theta1", &self.theta1);
        interval(&mut kv, "finite_sum", &self.finite_sum);
        kv.push(("tail_upper".into(), self.tail.hi_string(REPORT_DIGITS)));
        let closed = match &self.tail_closed_form {
            Some(c) => c.hi_string(REPORT_DIGITS),
            None => "not-applicable".into(),
        };
        kv.push(("tail_closed_form_upper".into(), closed));
        interval(&mut kv, "threshold", &self.threshold);
        kv.push(("margin_lo".into(), self.margin().lo_string(REPORT_DIGITS)));
        kv.push(("verdict".into(), self.verdict.to_string()));
        let mut out = String::from("# admissibility report\n");
        for (k, v) in kv {
            out.push_str(&format!("{k} = {v}\n"));
        }
        out
    }
}

impl AlphaBracket {
    pub fn to_key_value(&self) -> String {
        let mut out = String::from("# maximal admissible alpha\n");
        out.push_str(&format!("alpha_low = {}\n", self.alpha_low));
        out.push_str(&format!("alpha_high = {}\n", self.alpha_high));
        out.push_str(&format!("alpha_high_verdict = {}\n", self.high_verdict));
        out.push_str(&format!("resolution = {:e}\n", self.resolution));
        out.push_str(&format!("evidence_monotone = {}\n", self.evidence_is_monotone()));
        for (a, v) in &self.evidence {
            out.push_str(&format!("tested = {a} {v}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(lo: f64, hi: f64) -> Enclosure {
        Enclosure::from_f64(64, lo, hi).unwrap()
    }

    #[test]
    fn verdict_rules() {
        let thr = e(10.0, 10.0);
        assert_eq!(Verdict::decide(&e(9.0, 9.5), &e(0.1, 0.2), &thr), Verdict::Admissible);
        assert_eq!(Verdict::decide(&e(9.0, 9.9), &e(0.1, 0.2), &thr), Verdict::Undecided);
        assert_eq!(Verdict::decide(&e(10.5, 11.0), &e(0.0, 0.0), &thr), Verdict::NotAdmissible);
        assert_eq!(Verdict::decide(&e(9.9, 10.1), &e(0.0, 0.0), &thr), Verdict::Undecided);
    }
}
