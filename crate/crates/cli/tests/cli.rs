use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn schur2d(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_schur2d"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn report(args: &[&str]) -> (i32, Value) {
    let (code, text) = schur2d(args);
    (code, serde_json::from_str(&text).unwrap())
}

const DIRAC_11: &str = r#"{"kind":"measure","atoms":[{"t":"1","tau":"1","mass":"1"}]}"#;

#[test]
fn verify_dirac_at_depth_two() {
    let dir = tempfile::tempdir().unwrap();
    let mu = write(dir.path(), "mu.json", DIRAC_11);
    let (code, r) = report(&["verify", "--mode", "sym", "--depth", "2", "-i", &mu]);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "PASS");
    assert_eq!(r["match"].as_array().unwrap().len(), 4);
    assert!(r["match"].as_array().unwrap().iter().all(|c| c["equal"] == true));
}

#[test]
fn vanishing_first_plus_entry() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(
        dir.path(),
        "t.json",
        r#"{"kind":"table","mode":"SQUARE","L":1,"entries":[
            {"i":0,"j":0,"v":"1"},{"i":0,"j":1,"v":"0"},
            {"i":1,"j":0,"v":"0"},{"i":1,"j":1,"v":"0"}]}"#,
    );
    let (code, r) = report(&["sfrac", "--depth", "1", "-i", &t]);
    assert_eq!(code, 2);
    assert_eq!(r["status"], "ERROR");
    assert_eq!(r["error"]["kind"], "PlusRegularityFailure");
    assert_eq!(r["error"]["depth"], 1);

    let (code, r) = report(&["hankel", "--form", "S", "-n", "1", "-i", &t]);
    assert_eq!(code, 2);
    assert_eq!(r["artifact"]["regular"], false);
}

#[test]
fn malformed_json() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"kind\": \"table\", ");
    let (code, r) = report(&["jfrac", "-i", &bad]);
    assert_eq!(code, 3);
    assert_eq!(r["error"]["kind"], "Parse");
}

#[test]
fn schema_errors() {
    let dir = tempfile::tempdir().unwrap();
    let incomplete = write(
        dir.path(),
        "t.json",
        r#"{"kind":"table","mode":"SQUARE","L":1,"entries":[{"i":0,"j":0,"v":"1"}]}"#,
    );
    assert_eq!(schur2d(&["jfrac", "-i", &incomplete]).0, 3);
    let mu = write(dir.path(), "mu.json", DIRAC_11);
    // A measure has no recorded mode, but a fraction does.
    let (_, cf) = schur2d(&["jfrac", "-n", "1", "-i", &mu]);
    let cf = write(dir.path(), "cf.json", &cf);
    assert_eq!(schur2d(&["convergent", "--mode", "nonsym", "-i", &cf]).0, 3);
    assert_eq!(schur2d(&["convergent", "-n", "2", "-i", &cf]).0, 3);
    assert_eq!(schur2d(&["eval", "-i", &cf]).0, 3);
    assert_eq!(schur2d(&["verify", "--bogus"]).0, 3);
}

#[test]
fn degenerate_nonsymmetric_leading_entry() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(
        dir.path(),
        "t.json",
        r#"{"kind":"table","mode":"TRIANGULAR","L":1,"entries":[
            {"i":0,"j":0,"v":"0"},{"i":0,"j":1,"v":"0"},{"i":1,"j":0,"v":"1"}]}"#,
    );
    let (code, r) = report(&["jfrac", "--mode", "nonsym", "-n", "1", "-i", &t]);
    assert_eq!(code, 4);
    assert_eq!(r["error"]["kind"], "LeadingMomentZero");
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mu = write(
        dir.path(),
        "mu.json",
        r#"{"kind":"measure","atoms":[{"t":"1","tau":"2","mass":"1/3"},{"t":"-1","tau":"1/2","mass":"2"}]}"#,
    );
    let args = ["verify", "-n", "2", "-i", &mu, "--point", "3,1/2"];
    let a = schur2d(&args);
    let b = schur2d(&args);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn stages_chain_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let mu = write(
        dir.path(),
        "mu.json",
        r#"{"kind":"measure","atoms":[{"t":"2","tau":"1","mass":"1"},{"t":"1","tau":"3","mass":"1"}]}"#,
    );
    let out = |name: &str| dir.path().join(name).to_str().unwrap().to_owned();
    for (stage, from, to) in [
        ("moments", mu.clone(), out("table.json")),
        ("associate", out("table.json"), out("assoc.json")),
        ("jfrac", out("assoc.json"), out("cf.json")),
        ("convergent", out("cf.json"), out("conv.json")),
    ] {
        let (code, _) = schur2d(&[stage, "-n", "2", "-i", &from, "-o", &to]);
        assert_eq!(code, 0, "{stage}");
    }
    let direct: Value = {
        let (_, text) = schur2d(&["convergent", "-n", "2", "-i", &mu]);
        serde_json::from_str(&text).unwrap()
    };
    let chained: Value =
        serde_json::from_str(&std::fs::read_to_string(out("conv.json")).unwrap()).unwrap();
    assert_eq!(direct["convergent"], chained["convergent"]);
    assert_eq!(direct["value"], chained["value"]);

    let (code, r) = report(&["verify", "-n", "2", "-i", &out("assoc.json")]);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "PASS");
}

#[test]
fn s_form_and_tails() {
    let dir = tempfile::tempdir().unwrap();
    let mu = write(
        dir.path(),
        "mu.json",
        r#"{"kind":"measure","atoms":[{"t":"2","tau":"1","mass":"1"},{"t":"1","tau":"3","mass":"1"}]}"#,
    );
    let (code, r) = report(&[
        "verify", "--form", "S", "-n", "2", "-i", &mu, "--tail", "1/(X - 7)",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["diagnostics"][0]["check"], "tail");
    // Non-strictly-proper tails are rejected.
    let (code, _) = report(&["convergent", "-n", "2", "-i", &mu, "--tail", "X"]);
    assert_eq!(code, 3);
}

#[test]
fn evaluation_and_convergence() {
    let dir = tempfile::tempdir().unwrap();
    let mu = write(dir.path(), "mu.json", DIRAC_11);
    let (code, r) = report(&["eval", "-n", "1", "-i", &mu, "--point", "10,10"]);
    assert_eq!(code, 0);
    // One atom: -1/(X - (z + 2 + zeta)) with X = z zeta.
    assert_eq!(r["artifact"]["value"], "-1/78");
    assert_eq!(r["artifact"]["convergence"]["verdict"], true);
    let (code, r) = report(&["eval", "-n", "1", "-i", &mu, "--point", "3,5/2"]);
    assert_eq!(code, 4);
    assert_eq!(r["error"]["kind"], "EvaluationPole");
}

#[test]
fn merging_duplicate_atoms() {
    let dir = tempfile::tempdir().unwrap();
    let mu = write(
        dir.path(),
        "mu.json",
        r#"{"kind":"measure","atoms":[{"t":"1","tau":"1","mass":"1/2"},{"t":"1","tau":"1","mass":"1/2"}]}"#,
    );
    assert_eq!(schur2d(&["moments", "-i", &mu]).0, 3);
    let merged = schur2d(&["jfrac", "-n", "1", "-i", &mu, "--merge-duplicates"]);
    let single = write(dir.path(), "one.json", DIRAC_11);
    assert_eq!(merged, schur2d(&["jfrac", "-n", "1", "-i", &single]));
}
