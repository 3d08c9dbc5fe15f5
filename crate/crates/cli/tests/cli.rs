use std::process::{Command, Output};

fn braidlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn empty_selection_is_an_empty_report() {
    let o = braidlab(&["verify", "--groups", "none", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"version\":\"1\",\"records\":[]}\n");
}

#[test]
fn csv_rows_pass_for_formal_groups() {
    let o = braidlab(&["verify", "--groups", "P:4,wP+:4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.split("\r\n").filter(|l| !l.is_empty());
    assert_eq!(
        lines.next(),
        Some("id,citation,expected,computed,status,note")
    );
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() >= 10);
    assert!(rows.iter().all(|r| r.contains(",pass,")), "{out}");
}

#[test]
fn text_report_matches_snapshot() {
    let o = braidlab(&["verify", "--groups", "P:3", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/verify_p3.txt"));
}

#[test]
fn verify_is_byte_stable() {
    let args = [
        "verify",
        "--groups",
        "wP:3,vP+:3,P:4",
        "--format",
        "json",
        "--seed",
        "5",
    ];
    let a = braidlab(&args);
    let b = braidlab(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn failures_exit_with_one() {
    let o = braidlab(&["verify", "--groups", "wP:4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let records = v["records"].as_array().unwrap();
    let status = |id: &str| {
        records
            .iter()
            .find(|r| r["id"] == id)
            .map(|r| r["status"].as_str().unwrap().to_string())
    };
    assert_eq!(status("chen.closed.wP:4").as_deref(), Some("fail"));
    assert_eq!(status("lcs.anomaly.wP:4").as_deref(), Some("skipped"));
    assert_eq!(status("resonance.components.wP:4").as_deref(), Some("pass"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "--format", "xml"][..],
        &["verify", "--groups", "Q:3"],
        &["chen", "--group", "P:4", "--kmax", "6"],
        &["lcs", "--group", "wP:4", "--degree", "8"],
        &["lcs", "--group", "wP:4", "--method", "formula"],
        &["hilbert", "--group", "P:3", "--format", "csv"],
        &["frobnicate"],
    ] {
        assert_eq!(braidlab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn io_failure_exits_with_three() {
    let o = braidlab(&[
        "verify",
        "--groups",
        "none",
        "--out",
        "/nonexistent-dir/report.json",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn out_file_receives_the_report() {
    let path = std::env::temp_dir().join(format!("braidlab-{}.json", std::process::id()));
    let o = braidlab(&[
        "verify",
        "--groups",
        "none",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "{\"version\":\"1\",\"records\":[]}\n"
    );
    let _ = std::fs::remove_file(path);
}

#[test]
fn lcs_json_schema() {
    let o = braidlab(&["lcs", "--group", "P:4", "--degree", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["group"], "P:4");
    assert_eq!(v["method"], "enveloping_gb");
    assert_eq!(v["degree"], 5);
    assert_eq!(v["phi"], serde_json::json!([6, 4, 10, 21, 54]));
    assert_eq!(v["hilbert"].as_array().unwrap().len(), 6);
}

#[test]
fn chen_fox_report() {
    let o = braidlab(&[
        "chen", "--group", "vP+:4", "--kmax", "4", "--method", "fox", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in [
        "group",
        "kmax",
        "methods",
        "closed_form",
        "formula_prediction",
        "verdicts",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(
        v["methods"]["fox"]["theta"],
        serde_json::json!([6, 8, 29, 69])
    );
    assert_eq!(v["verdicts"]["fox_matches_closed_form"], true);
}

#[test]
fn resonance_report_schema() {
    let o = braidlab(&["resonance", "--group", "vP+:4", "--verify", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["obstruction"]["verdict"], "nonlinear_witness");
    assert_eq!(v["ideal_check"]["zeros_resonant"], 20);

    let o = braidlab(&["resonance", "--group", "P:4", "--verify"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 5);
    assert!(comps.iter().all(|c| c["dim"] == 2 && c["verified"] == true));
}

#[test]
fn catalog_dump_is_deterministic() {
    let a = braidlab(&["catalog", "--group", "wP+:3", "--kind", "gr"]);
    let b = braidlab(&["catalog", "--group", "wP+:3", "--kind", "gr"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["flavor"], "lie");
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
    let g = braidlab(&["catalog", "--group", "F:2", "--kind", "group"]);
    assert_eq!(g.status.code(), Some(0));
}
