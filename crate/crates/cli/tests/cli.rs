use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn assert_golden(args: &[&str], file: &str, name: &str, code: i32) {
    let path = fixture(file);
    let mut full: Vec<&str> = args.to_vec();
    full.push(path.to_str().unwrap());
    let out = run(&full);
    assert_eq!(out.status.code(), Some(code), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out), golden(name));
}

#[test]
fn verify_goldens() {
    assert_golden(&["verify", "--workers", "1"], "z4z2.triring", "verify_z4z2.txt", 0);
    assert_golden(&["verify", "--suite", "spectrum"], "tq3.triring", "verify_tq3_spectrum.txt", 0);
    assert_golden(&["verify", "--suite", "axioms"], "z4z2_corrupted.triring", "verify_corrupted_axioms.txt", 1);
}

#[test]
fn topology_goldens() {
    assert_golden(&["topology", "--format", "dot"], "tq3.triring", "topology_tq3.dot", 0);
    assert_golden(&["topology", "--format", "dot"], "z6.triring", "topology_z6.dot", 0);
    assert_golden(&["topology", "--format", "json"], "z4z2.triring", "topology_z4z2.json", 0);
}

#[test]
fn command_goldens() {
    assert_golden(&["spectrum"], "z4z2.triring", "spectrum_z4z2.txt", 0);
    assert_golden(&["quotient", "--even-gens", "2"], "z4z2.triring", "quotient_z4z2.triring", 0);
    assert_golden(&["radical", "--even-gens", "0"], "tq2.triring", "radical_tq2.txt", 0);
}

#[test]
fn every_fixture_verifies() {
    for name in ["z4z2.triring", "tq2.triring", "tq3.triring", "z6.triring", "z6_crt.triring"] {
        let out = run(&["verify", fixture(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}:\n{}", stdout(&out));
    }
}

#[test]
fn quotient_output_is_a_valid_document() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("q.triring");
    let out = run(&[
        "quotient",
        fixture("tq2.triring").to_str().unwrap(),
        "--even-gens",
        "3",
        "--output",
        q.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let check = run(&["verify", q.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.triring");
    std::fs::write(&bad, "{\"name\": ").unwrap();
    assert_eq!(run(&["check", bad.to_str().unwrap()]).status.code(), Some(2));

    std::fs::write(&bad, r#"{"name":"x","even":{"kind":"zn","n":4},"odd":{"kind":"zn","n":2},"lambda":[0,1],"rho":[0,1,0,1]}"#).unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("length mismatch"));

    let tq3 = fixture("tq3.triring");
    assert_eq!(run(&["check", "--max-size", "8", tq3.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--max-ideals", "2", tq3.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(run(&["check", fixture("z4z2_corrupted.triring").to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["check", "/nonexistent.triring"]).status.code(), Some(2));
    assert_eq!(
        run(&["radical", fixture("z4z2.triring").to_str().unwrap(), "--even-gens", "9"]).status.code(),
        Some(2)
    );
}

#[test]
fn json_export_round_trips() {
    let out = run(&["topology", "--format", "json", fixture("tq3.triring").to_str().unwrap()]);
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(format!("{value}\n"), text);
}

#[test]
fn worker_count_does_not_change_reports() {
    let file = fixture("z6_crt.triring");
    let one = run(&["verify", "--workers", "1", file.to_str().unwrap()]);
    let four = run(&["verify", "--workers", "4", file.to_str().unwrap()]);
    assert_eq!(one.stdout, four.stdout);
}
