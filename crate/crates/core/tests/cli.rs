use std::process::{Command, Output};

use serde_json::Value;

fn quasi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = quasi(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn triangle_formats() {
    let csv = stdout(&["triangle", "--s", "2", "--rows", "10", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 10);
    assert_eq!(csv.lines().nth(5), Some("1,9,25,25,9,1"));
    assert_eq!(
        stdout(&["triangle", "--s", "1", "--rows", "3", "--format", "plain"]),
        "1\n1 1\n1 2 1\n"
    );
    let doc = json(&["triangle", "--s", "3", "--rows", "5", "--format", "json"]);
    assert_eq!(doc["kind"], "triangle");
    assert_eq!(
        doc["payload"]["rows"][4],
        serde_json::json!(["1", "9", "15", "7", "1"])
    );
}

#[test]
fn csv_and_json_carry_the_same_values() {
    let csv = stdout(&["triangle", "--s", "3", "--rows", "12", "--format", "csv"]);
    let doc = json(&["triangle", "--s", "3", "--rows", "12", "--format", "json"]);
    for (line, row) in csv.lines().zip(doc["payload"]["rows"].as_array().unwrap()) {
        let from_json: Vec<&str> = row
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap())
            .collect();
        assert_eq!(line.split(',').collect::<Vec<_>>(), from_json);
    }
}

#[test]
fn big_integers_are_strings() {
    let doc = json(&["triangle", "--s", "2", "--rows", "80", "--format", "json"]);
    let middle = doc["payload"]["rows"][79][39].as_str().unwrap();
    assert!(middle.len() > 20, "{middle}");
    assert!(middle.parse::<num_bigint::BigInt>().is_ok());
}

#[test]
fn json_is_deterministic() {
    let args = ["qtriangle", "--s", "3", "--rows", "6", "--format", "json"];
    assert_eq!(quasi(&args).stdout, quasi(&args).stdout);
}

#[test]
fn coefficient_methods() {
    assert_eq!(
        stdout(&["coef", "--s", "2", "--n", "8", "--k", "4", "--method", "demoivre"]),
        "321\n"
    );
    assert_eq!(
        stdout(&["coef", "--s", "3", "--n", "3", "--k", "1", "--method", "lattice"]),
        "6\n"
    );
    assert_eq!(
        stdout(&["coef", "--s", "2", "--n", "5", "--k", "5", "--method", "explicit"]),
        "1\n"
    );
    let doc = json(&[
        "coef", "--s", "2", "--n", "8", "--k", "4", "--method", "spascal", "--format", "json",
    ]);
    assert_eq!(doc["kind"], "coefficient");
    assert_eq!(doc["payload"]["value"], "321");
    assert_eq!(doc["params"]["method"], "spascal");
}

#[test]
fn lattice_refuses_large_n() {
    let out = quasi(&[
        "coef", "--s", "2", "--n", "19", "--k", "3", "--method", "lattice",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n <= 18"));
}

#[test]
fn sequences() {
    assert_eq!(
        stdout(&["sequence", "--s", "2", "--kind", "sbonacci", "--count", "8"]),
        "0,1,1,2,4,7,13,24\n"
    );
    let ray = [
        "sequence", "--s", "2", "--kind", "ray", "--alpha", "2", "--beta", "0", "--r", "1",
        "--count", "6",
    ];
    assert_eq!(stdout(&ray), "0,1,1,1,2,6\n");
    assert_eq!(
        stdout(&["sequence", "--s", "1", "--kind", "sbonacci", "--count", "6"]),
        "0,1,1,2,3,5\n"
    );
    let negative = [
        "sequence", "--s", "3", "--kind", "ray", "--alpha", "3", "--beta", "1", "--r", "-2",
        "--count", "4",
    ];
    assert!(quasi(&negative).status.success());
}

#[test]
fn invalid_directions_name_the_constraint() {
    let beta = quasi(&[
        "sequence", "--s", "2", "--kind", "ray", "--alpha", "2", "--beta", "2", "--r", "1",
        "--count", "5",
    ]);
    assert_eq!(beta.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&beta.stderr).contains("beta"));
    let r = quasi(&[
        "sequence", "--s", "2", "--kind", "ray", "--alpha", "2", "--beta", "0", "--r", "-2",
        "--count", "5",
    ]);
    assert_eq!(r.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&r.stderr).contains("r + alpha"));
    let missing = quasi(&[
        "sequence", "--s", "2", "--kind", "ray", "--alpha", "2", "--count", "5",
    ]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        quasi(&["triangle", "--s", "2", "--rows", "3", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        quasi(&["triangle", "--s", "0", "--rows", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        quasi(&["coef", "--s", "2", "--n", "3", "--k", "1", "--method", "magic"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        quasi(&["verify", "--suite", "everything"]).status.code(),
        Some(2)
    );
}

#[test]
fn qtriangle_rows() {
    let doc = json(&["qtriangle", "--s", "2", "--rows", "3", "--format", "json"]);
    let rows = doc["payload"]["rows"].as_array().unwrap();
    assert_eq!(
        rows[0],
        serde_json::json!([{ "coeffs": ["1"], "text": "1" }])
    );
    let texts: Vec<&str> = rows[2]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["text"].as_str().unwrap())
        .collect();
    assert_eq!(texts, ["1", "2+q", "q"]);
}

#[test]
fn qtriangle_at_one_matches_triangle() {
    let q = json(&["qtriangle", "--s", "3", "--rows", "8", "--format", "json"]);
    let t = json(&["triangle", "--s", "3", "--rows", "8", "--format", "json"]);
    for (qrow, trow) in q["payload"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .zip(t["payload"]["rows"].as_array().unwrap())
    {
        for (cell, value) in qrow
            .as_array()
            .unwrap()
            .iter()
            .zip(trow.as_array().unwrap())
        {
            let sum: i64 = cell["coeffs"]
                .as_array()
                .unwrap()
                .iter()
                .map(|c| c.as_str().unwrap().parse::<i64>().unwrap())
                .sum();
            assert_eq!(sum.to_string(), value.as_str().unwrap());
        }
    }
}

#[test]
fn delannoy_transposes_the_triangle() {
    let csv = stdout(&["delannoy", "--s", "2", "--rows", "6", "--format", "csv"]);
    let table: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    // D(k, n-k) for n = 5 runs along an anti-diagonal
    let anti: Vec<&str> = (0..=5).map(|k| table[k][5 - k]).collect();
    assert_eq!(anti, ["1", "9", "25", "25", "9", "1"]);
    let weighted = stdout(&[
        "delannoy",
        "--weights",
        "1,2",
        "--a",
        "1",
        "--rows",
        "2",
        "--cols",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(weighted, "1,1,1\n1,4,7\n");
}

#[test]
fn verify_suites() {
    for suite in ["quasi", "gf", "bisnomial", "q"] {
        let out = quasi(&["verify", "--suite", suite]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{suite}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
    let tables = quasi(&["verify", "--suite", "tables"]);
    assert_eq!(tables.status.code(), Some(0));
    let text = String::from_utf8(tables.stdout).unwrap();
    assert!(text.contains("quadrabonacci row 7 col 4: printed 66, recomputed 161"));
}

#[test]
fn verify_reports_the_first_ray_counterexample() {
    let out = quasi(&["verify", "--suite", "rays", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["kind"], "report");
    assert_eq!(doc["payload"]["passed"], false);
    let failed = doc["payload"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["passed"] == false)
        .unwrap();
    assert_eq!(failed["name"], "ray recurrence");
    assert_eq!(failed["counterexample"]["at"]["r"], "-1");
    assert_eq!(failed["counterexample"]["values"]["lhs"], "2");
}

#[test]
fn out_writes_a_file() {
    let path = std::env::temp_dir().join(format!("quasi-cli-{}.json", std::process::id()));
    let out = quasi(&[
        "triangle",
        "--s",
        "2",
        "--rows",
        "4",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(
        doc["payload"]["rows"][3],
        serde_json::json!(["1", "5", "5", "1"])
    );
    std::fs::remove_file(path).unwrap();
}
