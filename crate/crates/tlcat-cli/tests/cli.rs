//! End-to-end tests of the `tlcat` binary: output schemas, determinism,
//! and the exit-code contract (0 pass, 1 failure/error, 2 inconclusive).

use assert_cmd::Command;

fn tlcat() -> Command {
    let mut cmd = Command::cargo_bin("tlcat").unwrap();
    cmd.env_remove("TLCAT_MAX_DEGREE");
    cmd
}

#[test]
fn verify_small_run_passes() {
    let output = tlcat()
        .args(["verify", "--n", "2", "--max-degree", "8"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["overall"], "pass");
    let checks = value["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for check in checks {
        assert_eq!(check["status"], "pass", "{check}");
        for field in ["id", "statement", "anchor", "witness"] {
            assert!(check[field].is_string(), "missing {field}");
        }
    }
}

#[test]
fn verify_output_is_byte_identical_across_runs() {
    let run = || {
        tlcat()
            .args(["verify", "--n", "2", "--suite", "hilbert,weyl", "--max-degree", "8"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn verify_exit_code_two_when_inconclusive() {
    tlcat()
        .args(["verify", "--n", "3", "--suite", "hilbert", "--max-degree", "2"])
        .assert()
        .code(2);
}

#[test]
fn verify_rejects_unknown_suite() {
    tlcat()
        .args(["verify", "--suite", "algebra"])
        .assert()
        .code(1)
        .stderr(predicates::str::contains("unknown suite"));
}

#[test]
fn verify_markdown_and_csv_formats() {
    let md = tlcat()
        .args(["verify", "--n", "1", "--suite", "relations", "--format", "md"])
        .output()
        .unwrap();
    assert!(md.status.success());
    let text = String::from_utf8(md.stdout).unwrap();
    assert!(text.contains("| id | anchor | status |"));
    assert!(text.contains("**overall: pass**"));

    let csv = tlcat()
        .args(["verify", "--n", "1", "--suite", "relations", "--format", "csv"])
        .output()
        .unwrap();
    assert!(csv.status.success());
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("id,anchor,status,statement,witness\n"));
    assert!(text.trim_end().ends_with("overall,,pass,,"));
}

#[test]
fn hilbert_reports_frozen_prefix() {
    let output = tlcat()
        .args(["hilbert", "--n", "2", "--max-degree", "8"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["match"], true);
    assert_eq!(value["prefix"], serde_json::json!([1, 2, 3, 3, 3]));
    assert_eq!(value["oracle_prefix"], serde_json::json!([1, 2, 3, 3, 3]));
    assert!(value["closed_form"].as_str().unwrap().contains("1 - t^2"));
}

#[test]
fn hilbert_with_word_and_pivot() {
    let output = tlcat()
        .args(["hilbert", "--n", "3", "--word", "2", "--pivot", "2", "--max-degree", "6"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["prefix"], serde_json::json!([1, 3, 4, 4]));
    assert_eq!(value["match"], true);
}

#[test]
fn hilbert_csv_rows() {
    let output = tlcat()
        .args(["hilbert", "--n", "2", "--max-degree", "4", "--format", "csv"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "degree,quotient_dim,oracle_dim,closed_form_dim");
    assert_eq!(lines[1], "0,1,1,1");
    assert_eq!(lines[2], "2,2,2,2");
    assert_eq!(lines[3], "4,3,3,3");
}

#[test]
fn hilbert_rejects_pivot_outside_word() {
    tlcat()
        .args(["hilbert", "--n", "3", "--word", "2", "--pivot", "3"])
        .assert()
        .code(1)
        .stderr(predicates::str::contains("pivot"));
}

#[test]
fn pairing_table_shape() {
    let output = tlcat()
        .args(["pairing-table", "--spec", "psi0", "--n", "2"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    // Header plus one row per basis diagram (five matchings on 3 strands),
    // every cell an explicit numerator/denominator split.
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "basis,b0,b1,b2,b3,b4");
    assert!(lines[1].starts_with("b0,("));
    assert!(lines[1].contains(")/("));
}

#[test]
fn pairing_table_accepts_all_trace_names() {
    for spec in ["std", "triv", "psi0", "standard", "trivial", "graded"] {
        tlcat()
            .args(["pairing-table", "--spec", spec, "--n", "1"])
            .assert()
            .success();
    }
    tlcat()
        .args(["pairing-table", "--spec", "bogus", "--n", "1"])
        .assert()
        .code(1);
}

#[test]
fn weyl_reports_lines_and_pass() {
    let output = tlcat()
        .args(["weyl", "--n", "2", "--word", "1", "--max-degree", "8"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["pass"], true);
    assert_eq!(value["transverse_count"], 2);
    assert_eq!(value["lines"].as_array().unwrap().len(), 3);
    let table = value["degree_table"].as_array().unwrap();
    assert_eq!(table.len(), 5);
    assert_eq!(table[0]["degree"], 0);
    assert_eq!(table[2]["ideal_dim"], table[2]["vanishing_dim"]);
}

#[test]
fn cells_json_and_markdown() {
    let output = tlcat()
        .args(["cells", "--n", "3", "--i", "2", "--max-degree", "12"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(value["pass"], true);
    assert_eq!(value["pairing_rank"], 3);
    assert_eq!(value["dimensions"]["total"], 6);
    assert_eq!(value["dimensions"]["levels"], serde_json::json!([1, 3, 2]));
    assert_eq!(value["end_dims"].as_array().unwrap().len(), 3);
    assert!(value["gram_markdown"]
        .as_str()
        .unwrap()
        .starts_with("| pairing |"));

    let md = tlcat()
        .args(["cells", "--n", "2", "--i", "1", "--format", "md"])
        .output()
        .unwrap();
    assert!(md.status.success());
    let text = String::from_utf8(md.stdout).unwrap();
    assert!(text.contains("| pairing | b0 | b1 | b2 |"));
    assert!(text.contains("pass: true"));
}

#[test]
fn cells_rejects_out_of_range_index() {
    tlcat()
        .args(["cells", "--n", "2", "--i", "3"])
        .assert()
        .code(1);
}

#[test]
fn max_degree_env_ceiling_applies() {
    let output = tlcat()
        .env("TLCAT_MAX_DEGREE", "4")
        .args(["hilbert", "--n", "2", "--max-degree", "100"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("capped at 4"));
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    // Ceiling 4 means exponent degrees 0..=2.
    assert_eq!(value["prefix"].as_array().unwrap().len(), 3);
}
