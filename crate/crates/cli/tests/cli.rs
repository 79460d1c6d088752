use std::process::{Command, Output};

fn positroid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_positroid")).args(args).env("POSITROID_WORKERS", "2").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn qword_first_line() {
    let o = positroid(&["strip", "qword", "--n", "7", "--k", "3", "--lambda", "1,2,4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("456 2345 1234 7"));
    assert!(out.contains("pi_lambda = (8,9,3,11,5,6,7)"));
}

#[test]
fn exit_codes() {
    assert_eq!(positroid(&["jp", "validate", "4234233"]).status.code(), Some(0));
    assert_eq!(positroid(&["jp", "validate", "433"]).status.code(), Some(1));
    assert_eq!(positroid(&["jp", "validate", "4x"]).status.code(), Some(2));
    assert_eq!(positroid(&["nonsense"]).status.code(), Some(2));
    assert_eq!(positroid(&["diagrams", "convert", "--cauchon", "../.#"]).status.code(), Some(1));
}

#[test]
fn json_report_shape() {
    let o = positroid(&["--json", "verify", "main-theorem", "--n", "4", "--k", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["results"]["failed"], 0);
    assert_eq!(v["results"]["instances"].as_array().unwrap().len(), 6 * 33);
    assert_eq!(v["checks"][0]["pass"], true);
}

#[test]
fn seeded_runs_are_reproducible() {
    let args = ["--seed", "5", "flag", "check", "--n", "7", "--k", "3", "--lambda", "1,2,4", "--f", "2333334"];
    let (a, b) = (positroid(&args), positroid(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cauchon_conversion() {
    let out = stdout(&positroid(&["diagrams", "convert", "--cauchon", "#.#/##./..."]));
    assert!(out.contains("bottom pipe dream {a24,a25,a34,a36}"));
    assert!(out.contains("permutation 143265"));
}

#[test]
fn stanley_reisner_of_the_staircase_complex() {
    let o = positroid(&["complex", "sr", "--word", "4321432434", "--target", "41523"]);
    assert!(o.status.success());
    // three unused letters plus three quadratic nonfaces
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert_eq!(first.matches(", ").count() + 1, 6);
    assert_eq!(first.matches('*').count(), 3);
}
