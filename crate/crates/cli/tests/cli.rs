//! End-to-end tests of the binary: golden JSON for the worked example and
//! the full table run, exit-code contract, and lossless report round-trips.

use std::process::{Command, Output};

fn bhcr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bhcr"))
        .args(args)
        .env_remove("BHCR_ENUM_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn assert_golden(actual: &str, golden: &str, name: &str) {
    assert_eq!(
        actual.trim(),
        golden.trim(),
        "golden mismatch for {name}; regenerate with the command in the test if intended"
    );
}

#[test]
fn worked_example_matches_golden_json() {
    let output = bhcr(&[
        "--json",
        "mirror-bv",
        "x0^2+x1^4+x2^4",
        "y0^2+y1^5*y2+y2^5*y3+y3^6",
        "--triple",
        "1,1,1",
    ]);
    assert!(output.status.success(), "{}", stderr(&output));
    assert_golden(
        &stdout(&output),
        include_str!("golden/worked_example.json"),
        "worked_example.json",
    );
}

#[test]
fn table_verify_matches_golden_json() {
    let output = bhcr(&["--json", "table", "verify"]);
    assert!(output.status.success(), "{}", stderr(&output));
    assert_golden(
        &stdout(&output),
        include_str!("golden/table_verify.json"),
        "table_verify.json",
    );
}

#[test]
fn analyze_matches_golden_json() {
    let output = bhcr(&["--json", "analyze", "x0^2+x1^4+x2^4", "--transpose"]);
    assert!(output.status.success(), "{}", stderr(&output));
    assert_golden(
        &stdout(&output),
        include_str!("golden/analyze_quartic.json"),
        "analyze_quartic.json",
    );
}

#[test]
fn reports_round_trip_losslessly() {
    for args in [
        vec![
            "--json",
            "mirror-bv",
            "x0^2+x1^4+x2^4",
            "y0^2+y1^5*y2+y2^5*y3+y3^6",
            "--triple",
            "1,1,1",
        ],
        vec!["--json", "analyze", "x0^2+x1^4+x2^4", "--transpose"],
        vec!["--json", "group", "x0^3+x1^3+x2^3"],
    ] {
        let output = bhcr(&args);
        assert!(output.status.success());
        let text = stdout(&output);
        let value: serde_json::Value = serde_json::from_str(&text).expect("valid json");
        let again = serde_json::to_string_pretty(&value).expect("serializes");
        let reparsed: serde_json::Value = serde_json::from_str(&again).expect("valid json");
        assert_eq!(value, reparsed);
    }
}

#[test]
fn analyze_reports_expected_values_in_text_mode() {
    let output = bhcr(&["analyze", "x0^2+x1^4+x2^4"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("weights: P(2,1,1), degree 4"));
    assert!(text.contains("|Aut| = 32, |SL| = 8, |SL/J| = 2"));
    assert!(text.contains("calabi-yau: true"));
}

#[test]
fn double_sextic_weights() {
    let output = bhcr(&["analyze", "x0^2+x1^5*x2+x2^5*x3+x3^6"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("weights: P(3,1,1,1), degree 6"));
}

#[test]
fn coefficients_warn_on_stderr() {
    let output = bhcr(&["analyze", "2*x0^3+x1^3+x2^3"]);
    assert!(output.status.success());
    assert!(stderr(&output).contains("coefficient 2"));
}

#[test]
fn exit_codes_follow_the_contract() {
    // 1: malformed input
    let output = bhcr(&["analyze", "x0^2+"]);
    assert_eq!(output.status.code(), Some(1), "{}", stderr(&output));

    // 2: mathematical obstruction (--require-cy on a non-Calabi-Yau input)
    let output = bhcr(&["analyze", "x0^3+x1^3", "--require-cy"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("Calabi-Yau"));

    // 2: split weight divisible by 6
    let output = bhcr(&["mirror-bv", "x0^2+x1^4+x2^4", "y0^2+y1^4+y2^6+y3^12"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("divisible by 6"));

    // 2: transposed split weights share a factor
    let output = bhcr(&["mirror-bv", "x0^2+x1^4+x2^4", "y0^2+y1^4*y2+y2^6*y3+y3^7"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("transposed"));

    // 2: undefined mirror
    let output = bhcr(&["triple", "14", "6", "0"]);
    assert_eq!(output.status.code(), Some(2));

    // 1: invalid triple
    let output = bhcr(&["triple", "3", "2", "1"]);
    assert_eq!(output.status.code(), Some(1));

    // 0: success
    let output = bhcr(&["triple", "2", "0", "0"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("not-available"));
}

#[test]
fn enumeration_cap_env_is_honored() {
    let output = Command::new(env!("CARGO_BIN_EXE_bhcr"))
        .args(["group", "x0^3+x1^3+x2^3"])
        .env("BHCR_ENUM_CAP", "10")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("enumeration cap"));
}

#[test]
fn generators_build_subgroups() {
    let output = bhcr(&["group", "x0^2+x1^4+x2^4", "--generators", "1/2,0,1/2"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("subgroup: order 2"));
    assert!(text.contains("(0, 1/4, 3/4)"));

    // a vector outside the group is refused
    let output = bhcr(&["group", "x0^2+x1^4+x2^4", "--generators", "1/3,0,0"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn full_groups_on_both_factors_transpose_to_trivial() {
    // the curve quotient has order 2; pulling back the full factor groups
    // leaves nothing on the transposed side
    let output = bhcr(&[
        "--json",
        "mirror-bv",
        "x0^2+x1^4+x2^4",
        "y0^2+y1^5*y2+y2^5*y3+y3^6",
        "--curve-generators",
        "1/2,0,1/2",
    ]);
    assert!(output.status.success(), "{}", stderr(&output));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let section = &value["borcea_voisin"];
    assert_eq!(section["curve_group"].as_array().unwrap().len(), 2);
    assert_eq!(section["product_group"].as_array().unwrap().len(), 2);
    assert_eq!(section["transposed_group"].as_array().unwrap().len(), 1);
    assert_eq!(value["verdicts"]["splitting_identity"], true);
}

#[test]
fn declared_variable_order_is_respected() {
    let output = bhcr(&["analyze", "x0^2+x0*x2^3+x1^3", "--vars", "x0,x1,x2"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("weights: P(3,2,1), degree 6"));

    let output = bhcr(&["analyze", "x0^2+x1^3", "--vars", "x0,x1,x2"]);
    assert_eq!(output.status.code(), Some(1));
}
