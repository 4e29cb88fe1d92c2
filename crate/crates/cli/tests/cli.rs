use std::process::{Command, Output};

fn nct(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nct"))
        .args(args)
        .env_remove("NCT_TIME_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Vec<serde_json::Value> {
    serde_json::from_slice(&o.stdout).expect("json array")
}

#[test]
fn gamma_json_row() {
    let o = nct(&["gamma", "--n", "38", "--group", "S", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["lower"], 10);
    assert_eq!(rows[0]["upper"], 10);
    assert_eq!(rows[0]["closed_form"], 10);
    assert_eq!(rows[0]["lower_sound"], true);
}

#[test]
fn sumfree_csv_has_schema_and_witness() {
    let o = nct(&[
        "sumfree",
        "--n",
        "6",
        "--variant",
        "coprime",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("#nct-schema=1"));
    assert!(lines.next().unwrap().starts_with("variant,n,maximum"));
    let row = lines.next().unwrap();
    assert!(row.starts_with("coprime-sum-free,6,4,true,"), "{row}");
}

#[test]
fn limits_two_p_ratios() {
    let o = nct(&[
        "limits", "--group", "S", "--parity", "even", "--min", "38", "--max", "120", "--step", "2p",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o);
    assert!(!rows.is_empty());
    for r in rows {
        let n = r["n"].as_f64().unwrap();
        let ratio = r["upper_ratio"].as_f64().unwrap();
        assert!((0.25..=0.25 + 2.0 / n).contains(&ratio), "{r}");
        assert_eq!(r["lower"], r["upper"]);
    }
}

#[test]
fn csv_and_json_share_fields() {
    let j = json(&nct(&["catalog", "--n", "41"]));
    let c = nct(&["catalog", "--n", "41", "--format", "csv"]);
    let text = stdout(&c);
    let header: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let keys: Vec<&str> = j[0]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    let mut h = header.clone();
    h.sort();
    let mut k = keys.clone();
    k.sort();
    assert_eq!(h, k);
    assert_eq!(text.lines().count(), 2 + j.len());
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let base = nct(&[
        "gamma", "--min", "20", "--max", "40", "--group", "A", "--format", "csv",
    ]);
    let par = nct(&[
        "gamma",
        "--min",
        "20",
        "--max",
        "40",
        "--group",
        "A",
        "--format",
        "csv",
        "--parallel",
        "4",
    ]);
    assert_eq!(base.stdout, par.stdout);
    assert_eq!(base.status.code(), par.status.code());
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cat.json");
    let o = nct(&["catalog", "--n", "37", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let rows: Vec<serde_json::Value> =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert!(rows.iter().all(|r| r["valid"] == true));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(
        nct(&["gamma", "--n", "38", "--group", "X"]).status.code(),
        Some(1)
    );
    assert_eq!(nct(&["gamma", "--group", "S"]).status.code(), Some(1));
    assert_eq!(nct(&["bogus"]).status.code(), Some(1));
    assert_eq!(
        nct(&["gamma", "--n", "38", "--group", "S", "--budget", "-1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        nct(&["sumfree", "--n", "9", "--step", "0"]).status.code(),
        Some(1)
    );
}

#[test]
fn verify_exit_codes() {
    // P22 needs p = 1 mod 3; at 11 it is not applicable and is reported as a usage error.
    assert_eq!(
        nct(&["verify", "--n", "11", "--group", "A", "--provenance", "P22"])
            .status
            .code(),
        Some(1)
    );
    let ok = nct(&["verify", "--min", "20", "--max", "30", "--group", "A"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(json(&ok).iter().all(|r| r["covered"] == true));
}

#[test]
fn exhausted_budget_exits_four() {
    let o = Command::new(env!("CARGO_BIN_EXE_nct"))
        .args(["gamma", "--n", "199", "--group", "A", "--format", "json"])
        .env("NCT_TIME_BUDGET", "0.01")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    let rows = json(&o);
    assert_eq!(rows[0]["certified"], false);
    assert_eq!(rows[0]["upper"], 66);
}

#[test]
fn triples_within_ceiling() {
    let o = nct(&["triples", "--min", "9", "--max", "60", "--kind", "cubes"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o).iter().all(|r| r["within_ceiling"] == true));
}
