use std::process::{Command, Output};

use serde_json::Value;

fn bsl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsl"))
        .args(args)
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/../.."))
        .output()
        .expect("bsl runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn validate_presets_and_files() {
    for g in ["modular", "golden-octagon", "groups/golden_octagon.json", "groups/modular.json"] {
        let out = bsl(&["validate", "--group", g]);
        assert_eq!(out.status.code(), Some(0), "{g}: {}", String::from_utf8_lossy(&out.stdout));
    }
    assert_eq!(bsl(&["validate", "--group", "no/such/file.json"]).status.code(), Some(2));
}

#[test]
fn expand_sqrt2() {
    let out = bsl(&["--json", "expand", "--group", "modular", "--alpha", "sqrt:2", "--depth", "6"]);
    assert!(out.status.success());
    let letters: Vec<String> = serde_json::from_value(json(&out)["letters"].clone()).unwrap();
    assert_eq!(letters.concat(), "aBaaBa");
}

#[test]
fn negative_alpha_is_accepted() {
    let out = bsl(&["expand", "--group", "modular", "--alpha", "-0.7071067811865475244008443621", "--depth", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn classical_exit_codes() {
    let out = bsl(&["--json", "check-classical", "--alpha", "sqrt:2", "(1+sqrt:5)/2", "--n", "10", "--scan", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = json(&out);
    assert_eq!(reports.as_array().unwrap().len(), 2);
    assert_eq!(reports[0]["expansion"], "[1; 2, 2, 2, 2, 2, 2, 2, 2, 2, 2]");
    // rational input is an error, not a failed law
    assert_eq!(bsl(&["check-classical", "--alpha", "1.5"]).status.code(), Some(2));
}

#[test]
fn convergents_obey_their_bounds() {
    let out = bsl(&["--json", "convergents", "--group", "golden-octagon", "--alpha", "sqrt:2", "--rmax", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    assert!(rows.as_array().unwrap().iter().all(|r| r["ok"] == true));
}

#[test]
fn enumerate_emits_json_lines() {
    let out = bsl(&["--json", "enumerate", "--group", "modular", "--qmax", "5", "--window", "0,1"]);
    assert!(out.status.success());
    let lines: Vec<Value> =
        String::from_utf8(out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[5]["point"], "0.5");
    assert_eq!(lines[5]["D"], "2");
}

#[test]
fn theorem_on_golden_passes_and_modular_records_the_skipped_convergent() {
    let args = ["--alpha", "sqrt:2", "--rmax", "10", "--qmax", "60"];
    let golden = bsl(&[&["check-theorem", "--group", "golden-octagon"], &args[..]].concat());
    assert_eq!(golden.status.code(), Some(0), "{}", String::from_utf8_lossy(&golden.stdout));
    // 3/2 has q²|√2 − 3/2| ≈ 0.343 < 0.4 but is not reached by the coding
    let modular = bsl(&[&["--json", "check-theorem", "--group", "modular"], &args[..]].concat());
    assert_eq!(modular.status.code(), Some(1));
    let report = json(&modular);
    assert_eq!(report["passed"], false);
}

#[test]
fn render_writes_svg() {
    let path = std::env::temp_dir().join(format!("bsl-ford-{}.svg", std::process::id()));
    let out = bsl(&["render", "--group", "modular", "--qmax", "8", "--window", "0,1", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(svg.matches("<circle").count() >= 20);
}
