use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_interlace"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn poly_from_files_and_stdin() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0").unwrap();
    let o = run(&["poly", f.path().to_str().unwrap()], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "6x + 5x^2\n");

    let o = run(&["poly", "--format", "graph6"], "C~\n>>graph6<<Ch\n");
    assert_eq!(stdout(&o), "8x\n2x + 3x^2\n");

    let o = run(&["poly", "-"], "3 0\n");
    assert_eq!(stdout(&o), "x^3\n");
}

#[test]
fn poly_json() {
    let o = run(&["poly", "--json", "--format", "graph6"], "Dhc\n");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["polynomial"], "6x + 5x^2");
    assert_eq!(v["coefficients"], serde_json::json!(["0", "6", "5"]));
    assert_eq!(v["order"], 5);
}

#[test]
fn euler_queries() {
    assert_eq!(stdout(&run(&["euler", "count"], "1 2 1 2\n")), "2\n");
    assert_eq!(stdout(&run(&["euler", "partitions"], "1 1\n")), "x + x^2\n");
    assert_eq!(stdout(&run(&["euler", "martin"], "1 2 1 2\n")), "2x\n");
    let o = run(&["euler", "orbit", "--json"], "1 2 3 1 3 4 2 4\n");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["orbit_size"], 5);
    assert_eq!(v["euler_circuits"], "5");
    assert_eq!(v["circuits"].as_array().unwrap().len(), 5);
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "--n", "3"], "");
    assert_eq!(stdout(&o).lines().count(), 8);
    let o = run(&["enumerate", "--n", "3", "--distinct"], "");
    assert_eq!(stdout(&o), "B? 1 x^3\nB_ 3 2x^2\nBo 3 2x + x^2\nBw 1 4x\n");
    let o = run(&["enumerate", "--n", "1"], "");
    assert_eq!(stdout(&o), "@ x\n");
    let o = run(&["enumerate", "--n", "4", "--connected"], "");
    assert_eq!(stdout(&o).lines().count(), 38);
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = run(&["verify", "identities", "--n-max", "4", "--samples", "30", "--json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["checked", "elapsed_ms", "n_max", "seed", "suite", "violations"]);
    assert_eq!(v["violations"], serde_json::json!([]));

    let o = run(&["verify", "conjectures", "--n-max", "5", "--samples", "50"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("K_1,3 among them: true"));

    // Order 4 already has two-term graphs that are not solid paths (C_4).
    let o = run(&["verify", "extremal", "--n-max", "4", "--json"], "");
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["violations"][0]["graph6"], "C]");
    assert_eq!(run(&["verify", "extremal", "--n-max", "3"], "").status.code(), Some(0));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["enumerate", "--n", "8"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "extremal", "--n-max", "12", "--force"], "").status.code(), Some(2));
    assert_eq!(run(&["euler", "count"], "1 2 1\n").status.code(), Some(2));
    assert_eq!(run(&["poly"], "2 1\n0 0\n").status.code(), Some(2));
    assert_eq!(run(&["poly", "/nonexistent/file"], "").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn suites_are_deterministic() {
    let args = ["verify", "conjectures", "--n-max", "4", "--samples", "40", "--seed", "9", "--json"];
    let strip = |o: Output| {
        let mut v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        v["elapsed_ms"] = 0.into();
        v
    };
    assert_eq!(strip(run(&args, "")), strip(run(&args, "")));
}
