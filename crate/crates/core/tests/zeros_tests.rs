use chebyshev_bias::enclosure::Enclosure;
use chebyshev_bias::zeros::{
    self, count_consistency, find_zeros, recertify, rotated_l, FastRotated, Provenance, SearchConfig,
};

fn oracle() -> Vec<f64> {
    include_str!("fixtures/oracle_zeros.txt")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.trim().parse().unwrap())
        .collect()
}

fn check_against_oracle(t1: f64, cfg: &SearchConfig) {
    let list = find_zeros(cfg).unwrap();
    let expected: Vec<f64> = oracle().into_iter().filter(|&g| g <= t1).collect();
    assert_eq!(list.len(), expected.len(), "T1 = {t1}");
    for (z, g) in list.zeros().iter().zip(&expected) {
        assert!(z.gamma.contains_f64(*g), "zero {} = {g} not in {:?}", z.index, z.gamma);
        assert!(z.certified);
        assert!(z.gamma.width() <= 2.0 * cfg.delta * (1.0 + 1e-12));
    }
    assert!(count_consistency(&list, cfg.c1, cfg.c2).is_consistent());
    assert_eq!(list.provenance(), Provenance::Computed);
}

#[test]
fn census_at_moderate_heights() {
    for t1 in [12.0, 50.0, 200.0] {
        check_against_oracle(t1, &SearchConfig::with_height(t1));
    }
}

#[test]
fn coarse_grid_is_repaired_by_rescanning() {
    let coarse = SearchConfig {
        grid_step: 4.0,
        max_rescans: 0,
        ..SearchConfig::with_height(200.0)
    };
    let raw = find_zeros(&coarse).unwrap();
    assert!(!count_consistency(&raw, coarse.c1, coarse.c2).is_consistent());
    let repaired = find_zeros(&SearchConfig {
        max_rescans: 2,
        ..coarse
    })
    .unwrap();
    assert!(count_consistency(&repaired, coarse.c1, coarse.c2).is_consistent());
    assert!(repaired.len() > raw.len());
    let truth = oracle();
    for z in repaired.zeros() {
        assert!(truth.iter().any(|&g| z.gamma.contains_f64(g)), "zero {} is spurious", z.index);
    }
}

#[test]
fn certificates_hold_on_reevaluation() {
    let list = find_zeros(&SearchConfig::with_height(50.0)).unwrap();
    for z in list.zeros() {
        let lo = rotated_l(&Enclosure::from_float(128, z.gamma.lo())).unwrap();
        let hi = rotated_l(&Enclosure::from_float(128, z.gamma.hi())).unwrap();
        assert!(
            (lo.is_positive() && hi.is_negative()) || (lo.is_negative() && hi.is_positive()),
            "zero {}",
            z.index
        );
    }
}

#[test]
fn independent_of_thread_count() {
    let run = |n: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
        pool.install(|| find_zeros(&SearchConfig::with_height(120.0)).unwrap())
    };
    let (a, b) = (run(1), run(4));
    assert_eq!(a.len(), b.len());
    for (x, y) in a.zeros().iter().zip(b.zeros()) {
        assert_eq!(x.gamma.lo(), y.gamma.lo());
        assert_eq!(x.gamma.hi(), y.gamma.hi());
    }
}

#[test]
fn fast_evaluator_tracks_enclosures() {
    let f = FastRotated::new(1200.0);
    for t in [0.0, 3.3, 17.0, 250.5, 777.7, 1126.9] {
        let z = rotated_l(&Enclosure::point(128, t)).unwrap();
        assert!((f.eval(t) - z.mid_f64()).abs() < 1e-10, "t = {t}");
    }
}

#[test]
fn file_round_trip_and_recertification() {
    let list = find_zeros(&SearchConfig::with_height(40.0)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.txt");
    zeros::io::save(&path, &list).unwrap();
    let back = zeros::io::load(&path, 128).unwrap();
    assert_eq!(back.len(), list.len());
    assert_eq!(back.height(), 40.0);
    assert_eq!(back.provenance(), Provenance::Imported);
    assert!(!back.all_certified());
    for (a, b) in list.zeros().iter().zip(back.zeros()) {
        assert_eq!(
            zeros::io::format_decimal(&a.gamma.mid(), 20),
            zeros::io::format_decimal(&b.gamma.mid(), 20)
        );
    }
    let again = recertify(&back, 1e-8, 128).unwrap();
    assert_eq!(again.provenance(), Provenance::ImportedRecertified);
    assert!(again.all_certified());
    for (a, b) in list.zeros().iter().zip(again.zeros()) {
        assert!(a.gamma.overlaps(&b.gamma));
    }
}

#[test]
fn imported_oracle_list_recertifies() {
    let text: String = oracle().iter().filter(|&&g| g < 100.0).map(|g| format!("{g}\n")).collect();
    let list = zeros::io::read_zero_list(text.as_bytes(), 128).unwrap();
    let list = recertify(&list, 1e-8, 128).unwrap();
    assert!(list.all_certified());
    assert_eq!(list.len(), oracle().iter().filter(|&&g| g < 100.0).count());
}

#[test]
fn recertifying_a_non_zero_fails() {
    let list = zeros::io::read_zero_list("6.0209489046975966\n7.5\n".as_bytes(), 128).unwrap();
    assert!(matches!(recertify(&list, 1e-8, 128), Err(zeros::ZeroError::NoSignChange { .. })));
}
