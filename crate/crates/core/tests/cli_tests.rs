use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chebyshev-bias")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn find_zeros(dir: &Path, t1: &str) -> String {
    let path = dir.join(format!("zeros-{t1}.txt"));
    let o = run(&["find-zeros", "--t1", t1, "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path.to_str().unwrap().to_string()
}

#[test]
fn usage_errors_exit_64() {
    let o = run(&["check-alpha", "--alpha", "0"]);
    assert_eq!(code(&o), 64);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--alpha"));
    assert_eq!(code(&run(&["check-alpha", "--alpha", "abc"])), 64);
    assert_eq!(code(&run(&["frobnicate"])), 64);
    assert_eq!(code(&run(&["find-zeros", "--t1", "0.5"])), 64);
    assert_eq!(code(&run(&["find-zeros", "--threads", "0"])), 64);
    assert_eq!(code(&run(&["check-alpha"])), 64);
    assert_eq!(code(&run(&["empirical-sum", "--x-grid", "0.1,0.2"])), 64);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn zero_list_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let zeros = find_zeros(dir.path(), "30");
    let text = std::fs::read_to_string(&zeros).unwrap();
    assert!(text.starts_with('#'));
    assert!(text.contains("# height = 30"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 10);

    let o = run(&["verify-zeros", "--zeros", &zeros]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("certified = 10"));

    // imported lists are refused until recertified
    let o = run(&["check-alpha", "--alpha", "4.19", "--t1", "30", "--zeros", &zeros]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--recertify"));

    let out = dir.path().join("report.txt");
    let o = run(&[
        "check-alpha", "--alpha", "4.19", "--t1", "30", "--zeros", &zeros, "--recertify", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let report = std::fs::read_to_string(&out).unwrap();
    assert_eq!(report, stdout(&o));
    assert!(report.contains("verdict = Admissible"));
    assert!(report.contains("zero_provenance = imported-recertified"));

    let o = run(&["check-alpha", "--alpha", "50", "--t1", "30", "--zeros", &zeros, "--recertify"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("verdict = NotAdmissible"));

    let o = run(&["gamma-sq-check", "--t1", "30", "--zeros", &zeros, "--recertify"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verdict = below-one-fifth"));

    let o = run(&["find-max-alpha", "--t1", "30", "--zeros", &zeros, "--recertify", "--resolution", "0.5"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("alpha_low = "));
}

#[test]
fn list_below_t1_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let zeros = find_zeros(dir.path(), "12");
    let o = run(&["check-alpha", "--alpha", "4", "--t1", "30", "--zeros", &zeros, "--recertify"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn verify_rejects_a_non_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "6.0209489046975966\n7.5\n").unwrap();
    assert_eq!(code(&run(&["verify-zeros", "--zeros", path.to_str().unwrap()])), 2);
    std::fs::write(&path, "10.2\n6.02\n").unwrap();
    assert_eq!(code(&run(&["verify-zeros", "--zeros", path.to_str().unwrap()])), 1);
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let zeros = find_zeros(dir.path(), "30");
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, format!("# settings\nalpha = 50\nt1 = 30\nzeros = {zeros}\nrecertify = true\n")).unwrap();
    let c = cfg.to_str().unwrap();
    let o = run(&["check-alpha", "--config", c]);
    assert_eq!(code(&o), 2);
    let o = run(&["check-alpha", "--config", c, "--alpha", "4.19"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("alpha = 4.19"));
    std::fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(code(&run(&["check-alpha", "--config", c, "--alpha", "4"])), 64);
}

#[test]
fn empirical_csv() {
    let o = run(&["empirical-sum", "--alpha", "1", "--cutoff", "10000", "--x-grid", "0.2,0.1,0.05"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,alpha,cutoff,value,truncation_bound");
    assert_eq!(lines.len(), 4);
    let o = run(&["empirical-sum", "--cutoff", "10000", "--x-grid", "0.1,0.000001"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn reports_do_not_depend_on_threads() {
    let dir = tempfile::tempdir().unwrap();
    let one = run(&["check-alpha", "--alpha", "4.19", "--t1", "60", "--threads", "1"]);
    let many = run(&["check-alpha", "--alpha", "4.19", "--t1", "60", "--threads", "8"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, many.stdout);
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    run(&["find-zeros", "--t1", "60", "--threads", "1", "--out", a.to_str().unwrap()]);
    run(&["find-zeros", "--t1", "60", "--threads", "8", "--out", b.to_str().unwrap()]);
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}
