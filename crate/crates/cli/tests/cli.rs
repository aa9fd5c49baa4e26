//! End-to-end tests of the `oval` binary.

use std::process::{Command, Output};

fn oval(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oval"))
        .args(args)
        .output()
        .expect("run oval")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("stdout is JSON")
}

#[test]
fn b1_json_has_expected_small_radius() {
    let out = oval(&["b1", "--minor", "1", "--major", "2", "--radius-large", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["r_small"].as_f64().unwrap() - 0.5).abs() < 1e-9);
    assert_eq!(v["major_axis_direction"], "horizontal");
}

#[test]
fn b1_infeasible_exits_2_with_both_forms() {
    let out = oval(&[
        "b1",
        "--minor",
        "1",
        "--major",
        "2",
        "--radius-large",
        "2.5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("requires oa > oc"), "stderr: {err}");
    assert!(err.contains("2 ae"), "stderr: {err}");
}

#[test]
fn missing_flag_exits_1() {
    let out = oval(&["b1", "--minor", "1", "--major", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scientific_notation_is_rejected() {
    let out = oval(&[
        "b1",
        "--minor",
        "1",
        "--major",
        "2",
        "--radius-large",
        "3e0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn b2_svg_has_four_arcs() {
    let out = oval(&[
        "b2",
        "--minor",
        "2",
        "--major",
        "3",
        "--radius-small",
        "1",
        "--format",
        "svg",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let svg = stdout(&out);
    assert_eq!(svg.matches("class=\"arc\"").count(), 4);
    assert!(svg.starts_with("<svg"));
}

#[test]
fn family_produces_valid_oval_json() {
    let out = oval(&[
        "family",
        "--major-axis",
        "6",
        "--radius-small",
        "1",
        "--radius-large",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["semiaxis_major"].as_f64().unwrap() - 3.0).abs() < 1e-9);
    let minor = v["semiaxis_minor"].as_f64().unwrap();
    assert!((minor - (4.0 - 5.0_f64.sqrt())).abs() < 1e-9);
}

#[test]
fn family_degenerate_exits_2() {
    let out = oval(&[
        "family",
        "--major-axis",
        "6",
        "--radius-small",
        "1",
        "--radius-large",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("degenerate family"));
}

#[test]
fn classic_s4_is_valid_and_clavius_needs_angle() {
    let out = oval(&["classic", "--kind", "S4", "--scale", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["r_small"].as_f64().unwrap() - 1.0).abs() < 1e-9);

    let out = oval(&["classic", "--kind", "Clavius", "--scale", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn encircle_examples() {
    let out = oval(&[
        "encircle", "--case", "adjacent", "--c1", "0,0,1", "--c2", "3,0,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["circle"]["radius"].as_f64().unwrap() - 4.0).abs() < 1e-9);
    assert_eq!(v["case_tag"], "adjacent");

    let out = oval(&[
        "encircle", "--case", "family", "--c1", "0,0,1", "--c2", "4,0,1", "--d", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["circle"]["radius"].as_f64().unwrap() - 4.0).abs() < 1e-9);
    assert!((v["circle"]["centre"]["x"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    assert!((v["circle"]["centre"]["y"].as_f64().unwrap() - 5.0_f64.sqrt()).abs() < 1e-9);

    let out = oval(&[
        "encircle", "--case", "separate", "--c1", "0,0,1", "--c2", "20,0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("too far apart"));
}

#[test]
fn validate_round_trip_and_failures() {
    let dir = std::env::temp_dir().join("oval-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b1.json");
    let out = oval(&[
        "b1",
        "--minor",
        "1",
        "--major",
        "2",
        "--radius-large",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = oval(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["valid"], true);

    // Perturb a junction: exit 2 with a named collinearity violation.
    let text = std::fs::read_to_string(&path).unwrap();
    let bad = text.replace("\"x\":1.8,\"y\":0.4", "\"x\":1.8,\"y\":0.401");
    assert_ne!(text, bad);
    let bad_path = dir.join("b1-bad.json");
    std::fs::write(&bad_path, bad).unwrap();
    let out = oval(&["validate", "--input", bad_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("junction_0_collinear"));

    // Truncated file: exit 1.
    let trunc_path = dir.join("b1-trunc.json");
    std::fs::write(&trunc_path, &text[..text.len() / 2]).unwrap();
    let out = oval(&["validate", "--input", trunc_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // Missing file: exit 1.
    let out = oval(&[
        "validate",
        "--input",
        dir.join("absent.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "b2",
        "--minor",
        "2",
        "--major",
        "3",
        "--radius-small",
        "1",
        "--format",
        "both",
        "--trace",
    ];
    let a = oval(&args);
    let b = oval(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn trace_flag_includes_labeled_steps() {
    let out = oval(&[
        "b1",
        "--minor",
        "1",
        "--major",
        "2",
        "--radius-large",
        "3",
        "--trace",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let steps = v["trace"]["steps"].as_array().unwrap();
    let labels: Vec<&str> = steps
        .iter()
        .filter(|s| s["kind"] == "point")
        .map(|s| s["label"].as_str().unwrap())
        .collect();
    assert_eq!(
        labels,
        ["e", "a", "c", "o", "b", "d", "t", "x", "h", "r", "z"]
    );
    assert!((v["result"]["r_small"].as_f64().unwrap() - 0.5).abs() < 1e-9);
}
