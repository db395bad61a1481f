use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simplicat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn homology_of_boundary() {
    let o = run(&["homology", "--in", &data("boundary2.sset"), "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("H_0 = Z\n"));
    assert!(out.contains("H_1 = Z\n"));
}

#[test]
fn collapse_is_verified() {
    let o = run(&["check-weq", "--map", &data("collapse.smap"), "--up-to", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).trim_end().ends_with("VERIFIED"));
}

#[test]
fn thomason_instance() {
    let o = run(&["thomason", "--system", &data("sys01.cats"), "--window", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("EQUAL through degree 2"));
}

#[test]
fn failed_verification_exits_one() {
    let o = run(&["check-qfib", "--map", &data("discrete.fun"), "--up-to", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NOT A QUASI-FIBRATION"));
    let o = run(&["check-qfib", "--map", &data("projection.fun"), "--up-to", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.sset");
    std::fs::write(&bad, "dim 0: a\ndim 1: e\n  d_0(e) = a\n  d_1(e) = q\n").unwrap();
    let o = run(&["homology", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4, column 12"), "{}", stderr(&o));
    let o = run(&["homology", "--in", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["homology", "--in", &data("boundary2.sset"), "--degree", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["homology"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["under", "--map", &data("discrete.fun"), "--object", "nowhere"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn truncated_listings_do_not_grow() {
    let dir = tempfile::tempdir().unwrap();
    let sd = dir.path().join("sd.sset");
    let o = run(&["sd", "--in", &data("boundary2.sset"), "--window", "1", "--out", sd.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["homology", "--in", sd.to_str().unwrap(), "--degree", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("truncated at window 1"), "{}", stderr(&o));
    let o = run(&["sd", "--in", &data("boundary2.sset"), "--window", "2", "--out", sd.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["homology", "--in", sd.to_str().unwrap()]);
    assert_eq!(stdout(&o), "H_0 = Z\nH_1 = Z\nvalid through degree 1\n");
}

#[test]
fn reports_are_deterministic() {
    let cases: Vec<Vec<String>> = vec![
        vec!["thomason".into(), "--system".into(), data("sys01.cats")],
        vec!["bar".into(), "--in".into(), data("z2.grpd"), "--machine".into()],
        vec!["clutch".into(), "--in".into(), data("mobius.clutch")],
        vec!["decompose".into(), "--map".into(), data("collapse.smap")],
        vec!["hocolim".into(), "--in".into(), data("span.diag")],
        vec!["gr".into(), "--system".into(), data("sys01.cats")],
        vec!["sd".into(), "--in".into(), data("boundary2.sset")],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn hocolim_of_span_is_a_circle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.sset");
    let o = run(&["hocolim", "--in", &data("span.diag"), "--window", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let o = run(&["homology", "--in", out.to_str().unwrap(), "--degree", "2"]);
    assert_eq!(stdout(&o), "H_0 = Z\nH_1 = Z\nvalid through degree 1\n");
}

#[test]
fn decompose_then_assemble() {
    let dir = tempfile::tempdir().unwrap();
    let bundle = dir.path().join("dec.txt");
    let o = run(&["decompose", "--map", &data("collapse.smap"), "--out", bundle.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let assembled = dir.path().join("asm.txt");
    let o = run(&["assemble", "--in", bundle.to_str().unwrap(), "--out", assembled.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["check-weq", "--map", assembled.to_str().unwrap(), "--up-to", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["roundtrip", "--map", &data("collapse.smap")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ROUND TRIP VERIFIED"));
}

#[test]
fn bar_reports() {
    let o = run(&["bar", "--in", &data("z2.grpd"), "--window", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("CONTRACTIBLE (reduced homology vanishes through degree 3)"));
    assert!(out.contains("  H_1 = Z/2\n  H_2 = 0\n  H_3 = Z/2\n"));
    let o = run(&["bar", "--in", &data("z3pair.grpd"), "--window", "3", "--subset", "a", "--up-to", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("HOMOLOGY EQUIVALENCE through degree 2"));
}

#[test]
fn machine_output_is_json() {
    let o = run(&["homology", "--in", &data("boundary2.sset"), "--degree", "2", "--machine"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["groups"][1]["betti"], 1);
    assert_eq!(v["verified"], true);
    let o = run(&["check-qfib", "--map", &data("discrete.fun"), "--machine"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_quasi_fibration"], false);
}

#[test]
fn clutching_and_categories() {
    let o = run(&["clutch", "--in", &data("mobius.clutch")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("CLUTCHING VERIFIED"));
    let o = run(&["under", "--map", &data("discrete.fun"), "--object", "1"]);
    assert!(stdout(&o).starts_with("--- category U\nobjects: (y,id_1)\n"));
    let o = run(&["nerve", "--in", &data("sys01.cats"), "--name", "F0", "--window", "2"]);
    assert!(stdout(&o).contains("dim 1: u\n"));
}
