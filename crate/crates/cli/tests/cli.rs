use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_u3d4"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("u3d4-cli-{}-{name}", std::process::id()))
}

#[test]
fn verify_all_q2_passes() {
    let o = run(&["verify-all", "--q", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("103 classes, 103 characters"));
    assert!(text.contains("[PASS] table/orthogonality"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn census_q3_json() {
    let o = run(&["census", "--q", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["classes"], 609);
    assert_eq!(v["passed"], true);
}

#[test]
fn census_quotient_level() {
    let o = run(&["census", "--q", "2", "--level", "modY5Y6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("level modY5Y6"));
}

#[test]
fn field_lemmas_q4() {
    let o = run(&["field-lemmas", "--p", "2", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("b-set/unique-t0"));
}

#[test]
fn csv_report_lists_checks() {
    let o = run(&["field-lemmas", "--q", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|x| &x[3] == "true"));
}

#[test]
fn derive_relations_q2() {
    let o = run(&["derive-relations", "--q", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("reproducing: [0]"));
    assert_eq!(
        run(&["derive-relations", "--q", "4"]).status.code(),
        Some(2)
    );
}

#[test]
fn exit_codes_for_refusals() {
    assert_eq!(run(&["census", "--q", "5"]).status.code(), Some(3));
    assert_eq!(run(&["census", "--q", "6"]).status.code(), Some(2));
    assert_eq!(
        run(&["characters", "--q", "2", "--family", "F4odd"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["characters", "--q", "2", "--family", "F7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["census"]).status.code(), Some(2));
}

#[test]
fn exports_json_and_csv() {
    let json = scratch("table.json");
    let o = run(&["characters", "--q", "2", "--export", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["characters"].as_array().unwrap().len(), 103);

    let csv_path = scratch("table.csv");
    let o = run(&[
        "characters",
        "--q",
        "2",
        "--format",
        "csv",
        "--export",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut r = csv::Reader::from_path(&csv_path).unwrap();
    assert_eq!(r.headers().unwrap().len(), 3 + 103);
    assert_eq!(r.records().count(), 103);
    let _ = std::fs::remove_file(json);
    let _ = std::fs::remove_file(csv_path);
}

#[test]
fn output_is_independent_of_worker_count() {
    let args = ["characters", "--q", "3", "--verify", "--format", "json"];
    let one = Command::new(env!("CARGO_BIN_EXE_u3d4"))
        .args(args)
        .env("U3D4_WORKERS", "1")
        .output()
        .unwrap();
    let many = run(&[&args[..], &["--workers", "3"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}
