use std::path::PathBuf;
use std::process::Command;

use leibniz_cli::{run, Outcome, EXIT_FAILED, EXIT_INPUT, EXIT_OK, EXIT_UNSUPPORTED};
use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn leibniz(args: &[&str]) -> Outcome {
    run(std::iter::once("leibniz").chain(args.iter().copied()))
}

fn report(o: &Outcome) -> Value {
    serde_json::from_str(&o.output).unwrap_or_else(|e| panic!("{e}: {}", o.output))
}

fn temp_file(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn check_accepts_fixtures() {
    let o = leibniz(&["check", &fixture("c3b.gf3.json")]);
    assert_eq!(o.code, EXIT_OK);
    let r = report(&o);
    assert_eq!(r["results"]["leibniz"], true);
    assert_eq!(r["command"], "check");
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn check_reports_the_violation_of_a_perturbed_table() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("h3.q.json")).unwrap();
    let mut file: Value = serde_json::from_str(&text).unwrap();
    file["table"][2][0][2] = Value::from("1");
    let path = temp_file(&dir, "bad.json", &file.to_string());
    let o = leibniz(&["check", &path]);
    assert_eq!(o.code, EXIT_FAILED);
    let r = report(&o);
    assert_eq!(r["results"]["leibniz"], false);
    let v = &r["results"]["violation"];
    assert!(v["i"].is_u64() && v["j"].is_u64() && v["k"].is_u64());
    assert_ne!(v["lhs"], v["rhs"]);
    assert_eq!(r["errors"][0]["kind"], "not-leibniz");

    // every other file command refuses the table the same way
    assert_eq!(leibniz(&["analyze", &path]).code, EXIT_FAILED);
}

#[test]
fn input_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("c2.q.json")).unwrap();
    let bad_scalar = temp_file(&dir, "zero.json", &text.replacen("\"1\"", "\"5/0\"", 1));
    let o = leibniz(&["check", &bad_scalar]);
    assert_eq!(o.code, EXIT_INPUT);
    assert_eq!(report(&o)["errors"][0]["kind"], "field-parse-error");

    let truncated = temp_file(&dir, "cut.json", &text[..text.len() / 2]);
    let o = leibniz(&["analyze", &truncated]);
    assert_eq!(o.code, EXIT_INPUT);
    assert_eq!(report(&o)["errors"][0]["kind"], "parse-error");

    let missing = dir.path().join("absent.json");
    assert_eq!(leibniz(&["battery", missing.to_str().unwrap()]).code, EXIT_INPUT);
    assert_eq!(leibniz(&["frobnicate"]).code, EXIT_INPUT);
    assert_eq!(leibniz(&["check", &fixture("c2.q.json"), "--field", "gf6"]).code, EXIT_INPUT);
    assert_eq!(leibniz(&["--help"]).code, EXIT_OK);
}

#[test]
fn analyze_reports_series_and_radicals() {
    let o = leibniz(&["analyze", &fixture("c3b.q.json")]);
    assert_eq!(o.code, EXIT_OK);
    let r = &report(&o)["results"];
    assert_eq!(r["predicates"]["is_solvable"], true);
    assert_eq!(r["predicates"]["is_nilpotent"], false);
    assert_eq!(r["nilradical"]["status"], "exact");
    assert_eq!(r["nilradical"]["subspace"]["dim"], 2);
    assert_eq!(r["leib_kernel"]["dim"], 2);

    let o = leibniz(&["analyze", &fixture("sl2.q.json")]);
    assert_eq!(o.code, EXIT_OK);
    assert!(report(&o)["results"]["radical"]["unavailable"].is_string());
}

#[test]
fn decompose_solvable_and_non_solvable() {
    let o = leibniz(&["decompose", &fixture("c3b.gf3.json")]);
    assert_eq!(o.code, EXIT_OK, "{}", o.output);
    let r = &report(&o)["results"];
    assert_eq!(r["n"], 1);
    assert_eq!(r["components"].as_array().unwrap().len(), 2);

    let o = leibniz(&["decompose", &fixture("sl2.gf5.json")]);
    assert_eq!(o.code, EXIT_FAILED);
    assert_eq!(report(&o)["errors"][0]["kind"], "not-solvable");
}

#[test]
fn a_algebra_on_h3_is_false_with_witness() {
    let o = leibniz(&["a-algebra", &fixture("h3.gf2.json")]);
    assert_eq!(o.code, EXIT_OK);
    let v = &report(&o)["results"]["verdict"];
    assert_eq!(v["value"], "false");
    assert!(v["witness"]["dim"].as_u64().unwrap() >= 2);

    let o = leibniz(&["a-algebra", &fixture("c2.q.json")]);
    assert_eq!(report(&o)["results"]["verdict"]["value"], "true");
}

#[test]
fn field_flag_reinterprets_tables() {
    let o = leibniz(&["a-algebra", &fixture("c3a.q.json"), "--field", "gf2"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(report(&o)["results"]["verdict"]["value"], "false");
}

#[test]
fn battery_passes_on_fixtures() {
    for name in ["c2.gf3.json", "c3b.gf2.json", "r2.q.json", "h3.gf2.json", "sl2.gf3.json"] {
        let o = leibniz(&["battery", &fixture(name)]);
        assert_eq!(o.code, EXIT_OK, "{name}: {}", o.output);
        let r = report(&o);
        assert!(r["results"]["report"]["clauses"].as_array().unwrap().len() >= 2);
    }
}

#[test]
fn cyclic_example_and_failures() {
    let o = leibniz(&["cyclic", "--field", "gf2", "--n", "3", "--alphas", "1,0"]);
    assert_eq!(o.code, EXIT_OK);
    let r = &report(&o)["results"];
    assert_eq!(r["polynomial"], "x^3 + x");
    let factors: Vec<(String, u64)> = r["factorization"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| (f["factor"].as_str().unwrap().to_string(), f["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(factors, vec![("x".to_string(), 1), ("x + 1".to_string(), 2)]);
    assert_eq!(r["monolithic"], true);
    assert_eq!(r["phi_free"], false);
    assert_eq!(r["is_a"], true);

    let o = leibniz(&["cyclic", "--field", "gf9", "--n", "2", "--alphas", "[0,1]"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.output);

    let o = leibniz(&["cyclic", "--field", "q", "--n", "6", "--alphas", "1,0,0,0,-1/2"]);
    assert_eq!(o.code, EXIT_UNSUPPORTED);
    assert_eq!(report(&o)["errors"][0]["kind"], "unsupported-factorization");

    assert_eq!(leibniz(&["cyclic", "--n", "3", "--alphas", "1"]).code, EXIT_INPUT);
    assert_eq!(leibniz(&["cyclic", "--field", "gf3", "--n", "2", "--alphas", "x"]).code, EXIT_INPUT);
}

#[test]
fn frattini_and_enumerate() {
    let o = leibniz(&["frattini", &fixture("c3b.gf2.json")]);
    assert_eq!(o.code, EXIT_OK);
    let r = &report(&o)["results"];
    assert_eq!(r["phi_free"], false);
    assert_eq!(r["frattini"]["dim"], 1);
    assert_eq!(leibniz(&["frattini", &fixture("c2.q.json")]).code, EXIT_UNSUPPORTED);

    let o = leibniz(&["enumerate", &fixture("c2.gf2.json")]);
    assert_eq!(o.code, EXIT_OK);
    let c = &report(&o)["results"]["counts"];
    assert_eq!(c["subspaces"], 5);
    assert_eq!(c["subalgebras"], 4);
    assert_eq!(c["ideals"], 3);

    let o = leibniz(&["enumerate", &fixture("c2.gf2.json"), "--kind", "ideals", "--list"]);
    assert_eq!(report(&o)["results"]["subspaces"]["ideals"].as_array().unwrap().len(), 3);
    assert_eq!(leibniz(&["enumerate", &fixture("h3.gf5.json"), "--budget", "10"]).code, EXIT_UNSUPPORTED);
    assert_eq!(leibniz(&["enumerate", &fixture("h3.q.json")]).code, EXIT_UNSUPPORTED);
}

#[test]
fn corpus_writes_checkable_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("corpus");
    let o = leibniz(&["corpus", "--max-n", "3", "--field", "gf2", "--output", out.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    let r = report(&o);
    let count = r["results"]["count"].as_u64().unwrap() as usize;
    let files: Vec<_> = std::fs::read_dir(&out).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), count);
    assert!(out.join("cyclic.gf2.n3.1-1.json").exists());
    for f in files {
        assert_eq!(leibniz(&["check", f.to_str().unwrap()]).code, EXIT_OK, "{}", f.display());
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["battery", &fixture("c3b.gf3.json"), "--seed", "7"];
    assert_eq!(leibniz(&args).output, leibniz(&args).output);
    let args = ["analyze", &fixture("r2.q.json"), "--format", "text"];
    let a = leibniz(&args);
    assert_eq!(a, leibniz(&args));
    assert!(a.output.contains("command: analyze"));
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let o = leibniz(&["check", &fixture("r2.q.json"), "--output", target.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.output.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(r["exit_status"], 0);
}

#[test]
fn binary_exit_status_matches() {
    let bin = env!("CARGO_BIN_EXE_leibniz");
    let ok = Command::new(bin).args(["check", &fixture("c2.gf2.json")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let bad = Command::new(bin).args(["frattini", &fixture("c2.q.json")]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_UNSUPPORTED));
    let r: Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert_eq!(r["exit_status"], EXIT_UNSUPPORTED);
}
