#![allow(clippy::excessive_precision)]

use std::sync::OnceLock;

use chebyshev_bias::admissibility::{
    check_alpha, finite_sum, find_max_alpha_from, gamma_square_tail_check, tail_bound, theta1,
    AdmissibilityError, VerifierConfig, Verdict,
};
use chebyshev_bias::enclosure::Enclosure;
use chebyshev_bias::special::anderson_bound;
use chebyshev_bias::zeros::{find_zeros, ZeroList};
use rug::Float;

const P: u32 = 128;

fn config() -> VerifierConfig {
    VerifierConfig {
        t1: 200.0,
        ..VerifierConfig::default()
    }
}

fn list() -> &'static ZeroList {
    static LIST: OnceLock<ZeroList> = OnceLock::new();
    LIST.get_or_init(|| find_zeros(&config().search()).unwrap())
}

fn oracle_zeros() -> Vec<f64> {
    include_str!("fixtures/oracle_zeros.txt")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.trim().parse().unwrap())
        .collect()
}

#[test]
fn finite_sum_matches_direct_summation() {
    // mpmath over the reference zeros below 200
    let cases = [
        ("4", "0.496416786773734110103348477815"),
        ("10", "5.00409595106057756474357856932"),
        ("20.40442", "20.1276585044281372448548812865"),
    ];
    for (alpha, expected) in cases {
        let a = Enclosure::parse(P, alpha).unwrap();
        let s = finite_sum(&a, list()).unwrap();
        let oracle = Float::with_val(P, Float::parse(expected).unwrap());
        let d = Float::with_val(P, s.mid() - &oracle).abs();
        assert!(d <= s.width(), "alpha = {alpha}: {s:?} vs {oracle}");
        assert!(s.width() < 1e-7);
    }
}

#[test]
fn tail_exceeds_known_zeros_above_t1() {
    let a = Enclosure::parse(P, "20.40442").unwrap();
    let th = theta1(1127.0, 0.315, 6.445, P).unwrap();
    let tail = tail_bound(&a, 1127.0, &th).unwrap();
    let mut partial = Enclosure::zero(P);
    for g in oracle_zeros().into_iter().filter(|&g| g > 1127.0) {
        partial = &partial + &anderson_bound(&a, &Enclosure::point(P, g)).unwrap();
    }
    let partial = partial.mul_int(2);
    // mpmath: 2.15439877941733019243519338497e-37
    assert!((partial.mid_f64() / 2.15439877941733e-37 - 1.0).abs() < 1e-9);
    assert!(partial.hi() <= tail.hi());
}

#[test]
fn reports_recheck_and_serialize() {
    for alpha in [1.0, 4.0, 4.19, 10.0, 19.0, 25.0] {
        let r = check_alpha(alpha, list(), &config()).unwrap();
        assert_eq!(r.recheck(), r.verdict);
        if r.verdict == Verdict::Admissible {
            assert!((&r.finite_sum + &r.tail).hi() < r.threshold.lo());
            assert!(r.margin().is_positive());
        }
        let text = r.to_key_value();
        assert!(text.contains(&format!("verdict = {}", r.verdict)));
        assert!(text.contains("finite_sum_hi = "));
        assert!(text.contains("t1 = 200"));
    }
    assert_eq!(check_alpha(4.19, list(), &config()).unwrap().verdict, Verdict::Admissible);
    assert_eq!(check_alpha(25.0, list(), &config()).unwrap().verdict, Verdict::NotAdmissible);
}

#[test]
fn bisection_contract() {
    let b = find_max_alpha_from(list(), &config(), 0.01, 4.0).unwrap();
    assert!(b.alpha_high - b.alpha_low <= 0.01 + 1e-12);
    assert_eq!(check_alpha(b.alpha_low, list(), &config()).unwrap().verdict, Verdict::Admissible);
    assert_ne!(b.high_verdict, Verdict::Admissible);
    assert!(b.evidence_is_monotone());
    assert!(b.alpha_low < 20.40443);
    assert!(matches!(
        find_max_alpha_from(list(), &config(), 0.01, 100.0),
        Err(AdmissibilityError::SeedNotAdmissible { .. })
    ));
}

#[test]
fn inverse_squares() {
    let s = gamma_square_tail_check(list(), &config()).unwrap();
    // mpmath: the reference zeros below 200 give 0.0733478339528564821
    assert!(s.lo() <= &0.0733478339528565 && s.hi() > &0.0733478339528564);
    assert!(s.hi() < &0.2);
    let first = 1.0 / (6.0209489046975966f64 * 6.0209489046975966);
    assert!(s.lo() > &first);
}

#[test]
fn preconditions() {
    let cfg = VerifierConfig::default();
    assert!(matches!(
        check_alpha(4.0, list(), &cfg),
        Err(AdmissibilityError::HeightMismatch { .. })
    ));
    let truncated = list().truncated(100.0).unwrap();
    let cut = VerifierConfig { t1: 100.0, ..cfg.clone() };
    assert!(check_alpha(4.0, &truncated, &cut).is_ok());
    let sparse = ZeroList::new(list().zeros()[..20].to_vec(), 200.0, list().provenance(), list().delta()).unwrap();
    assert!(matches!(
        check_alpha(4.0, &sparse, &config()),
        Err(AdmissibilityError::CountInconsistent { found: 20, .. })
    ));
    let bad = VerifierConfig { c1: -1.0, ..config() };
    assert!(check_alpha(4.0, list(), &bad).is_err());
}
