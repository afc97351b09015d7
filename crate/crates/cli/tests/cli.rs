use std::process::Command;

use wbk_cli::{run, USAGE_EXIT};

fn wbk(args: &[&str]) -> wbk_cli::Outcome {
    run(std::iter::once("wbk").chain(args.iter().copied()))
}

#[test]
fn braid_on_c3_sym3_passes() {
    let out = wbk(&["braid", "--catalog", "c3_sym3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "729 triples checked\nbraid: pass\n");
}

#[test]
fn braid_failure_prints_the_triple() {
    let dir = std::env::temp_dir().join(format!("wbk-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    // The flip on {0, 1, 2} with r(0, 1) replaced by (0, 2).
    let map = r#"{"kind":"solution","order":3,"map":[[[0,0],[0,2],[2,0]],[[0,1],[1,1],[2,1]],[[0,2],[1,2],[2,2]]]}"#;
    std::fs::write(&path, map).unwrap();
    let out = wbk(&["braid", "--input", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(
        out.stdout.starts_with("BRAID-FAIL 0 0 1\n"),
        "{}",
        out.stdout
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn socle_of_c3_sym3() {
    let out = wbk(&["soc", "--catalog", "c3_sym3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "{0, 3}\nlocal: {0.0, 1.0}\nsoc: info\n");
}

#[test]
fn right_series_of_z6() {
    let out = wbk(&["series", "right", "--catalog", "z6_exotic"]);
    assert_eq!(out.code, 0);
    assert!(out
        .stdout
        .starts_with("right: |S⁽¹⁾|=6 → |S⁽²⁾|=3 → |S⁽³⁾|=1 (terminated, index 2)\n"));
}

#[test]
fn ideals_carry_tier_tags() {
    let out = wbk(&["ideals", "--catalog", "z6_exotic"]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(
        lines,
        [
            "mode: exhaustive",
            "{0} I",
            "{0, 3} SL",
            "{0, 2, 4} I",
            "{0, 1, 2, 3, 4, 5} I",
            "ideals: info"
        ]
    );
}

#[test]
fn json_mirrors_report_fields() {
    let out = wbk(&["ann", "--catalog", "z6_exotic", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["command"], "ann");
    assert_eq!(v["status"], "info");
    assert_eq!(v["lines"][0], "{0}");
    assert_eq!(v["witnesses"]["set"], serde_json::json!([0]));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["classify", "--catalog", "chain18"],
        vec!["ideals", "--catalog", "vee_sym3", "--format", "json"],
        vec!["compose", "--seed", "7"],
        vec!["iso", "--catalog", "c3_sym3", "--other", "catalog:c3_sym3"],
    ] {
        assert_eq!(wbk(&args), wbk(&args), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(wbk(&["validate", "--catalog", "z6_exotic"]).code, 0);
    assert_eq!(wbk(&["frobnicate"]).code, USAGE_EXIT);
    assert_eq!(wbk(&["soc"]).code, USAGE_EXIT);
    assert_eq!(wbk(&["soc", "--catalog", "no_such_entry"]).code, USAGE_EXIT);
    assert_eq!(
        wbk(&["quotient", "--catalog", "z6_exotic", "--ideal", "0,3"]).code,
        1
    );
    assert_eq!(
        wbk(&["quotient", "--catalog", "z6_exotic", "--ideal", "0,9"]).code,
        USAGE_EXIT
    );
    let sandwich = wbk(&[
        "sandwich",
        "--catalog",
        "z6_exotic",
        "--chain",
        "0;0,2,4;0,1,2,3,4,5",
    ]);
    assert_eq!(sandwich.code, 1);
    assert!(sandwich.stdout.contains("element 2"));
    assert_eq!(wbk(&["sandwich", "--catalog", "c2_c4_braces"]).code, 0);
}

#[test]
fn invalid_structure_is_a_failure_not_a_usage_error() {
    let dir = std::env::temp_dir().join(format!("wbk-cli-invalid-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.json");
    std::fs::write(&path, r#"{"kind":"group","order":2,"op":[[0,1],[1,1]]}"#).unwrap();
    let out = wbk(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("invalid: group"));
    std::fs::write(&path, r#"{"kind":"group","order":2,"op":[[0,1],"#).unwrap();
    let out = wbk(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(out.code, USAGE_EXIT);
    assert!(out.stderr.contains("parse error at byte"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn homs_and_iso() {
    let out = wbk(&["homs", "--catalog", "c3", "--other", "catalog:sym3"]);
    assert!(out.stdout.starts_with("3 homomorphisms\n"));
    let out = wbk(&[
        "iso",
        "--catalog",
        "c3_sym3",
        "--other",
        "catalog:z6_over_c2",
    ]);
    assert_eq!(out.code, 1);
}

#[test]
fn period_and_regularity() {
    let out = wbk(&["period", "--catalog", "c2_c4_braces"]);
    assert_eq!(out.stdout, "period 2\nperiod: pass\n");
    assert_eq!(wbk(&["regularity", "--catalog", "c3_sym3"]).code, 0);
}

#[test]
fn binary_matches_library() {
    let out = Command::new(env!("CARGO_BIN_EXE_wbk"))
        .args(["soc", "--catalog", "c3_sym3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        wbk(&["soc", "--catalog", "c3_sym3"]).stdout
    );
}
