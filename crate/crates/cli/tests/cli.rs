use std::process::{Command, Output};

fn specht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn prints_the_factored_polynomial() {
    let o = specht(&["specht", "--m", "[[0,2,2],[2]]", "--t", "[[1,3,4],[2]]"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("F = (x2^2 - x1^2)*x3^2*x4^2"), "{out}");
    assert!(out.contains("Q = (x2 + x1)*x3^2*x4^2"), "{out}");
}

#[test]
fn augmented_polynomials_need_cocharge() {
    let o = specht(&["specht", "--m", "[[0,0,1],[1]]", "--t", "[[1,3,4],[2]]", "--i", "[0,2,3]"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("F^I = ") && out.contains("F^I,hom = "), "{out}");

    let o = specht(&["specht", "--m", "[[0,2,2],[2]]", "--t", "[[1,3,4],[2]]", "--i", "[2]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn counts_ordered_set_partitions() {
    let o = specht(&["count", "ops", "--n", "4", "--k", "2", "--s", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.trim() == "16"));
}

#[test]
fn counts_kostka_numbers() {
    let o = specht(&["count", "kostka", "--lambda", "[2,1]", "--alpha", "[1,1,1]"]);
    assert!(stdout(&o).lines().any(|l| l.trim() == "2"));
}

#[test]
fn lifting_passes_in_small_degree() {
    let o = specht(&["verify", "forstab", "--n", "3", "--max-sum", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: pass"));
}

#[test]
fn bad_parameters_exit_with_usage() {
    for args in [
        &["count", "ops", "--n", "4", "--k", "2", "--s", "5"][..],
        &["verify", "rnks-dim", "--n", "2", "--k", "2", "--s", "3"],
        &["verify", "extvmlim", "--n", "2", "--d", "2"],
        &["specht", "--m", "[[0,2],[1]]", "--t", "[[1,2,3]]"],
        &["specht", "--m", "not json", "--t", "[[1]]"],
        &["frobnicate"],
    ] {
        assert_eq!(specht(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_is_deterministic_across_threads() {
    let args = ["--json", "verify", "splexseq", "--max-n", "3"];
    let one = specht(&args);
    let many = Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .env("SPECHT_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(doc["command"], "verify");
    assert_eq!(doc["verdict"], "pass");
    assert!(doc["reports"].as_array().unwrap().len() > 1);
}

#[test]
fn decompositions_report_rank() {
    let o = specht(&["--json", "decompose", "rnks", "--n", "4", "--k", "2", "--s", "2"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["reports"][0]["rank"], 14);

    let o = specht(&["decompose", "rnI", "--n", "3", "--i", "[0,2]", "--hom"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn report_goes_to_file() {
    let path = std::env::temp_dir().join(format!("specht-cli-{}.json", std::process::id()));
    let o = specht(&["--json", "--out", path.to_str().unwrap(), "verify", "bijvecs", "--n", "3", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["verdict"], "pass");
    std::fs::remove_file(path).ok();
}

#[test]
fn selftest_passes() {
    let o = specht(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
