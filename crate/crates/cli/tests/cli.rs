use std::path::PathBuf;
use std::process::{Command, Output};

use acmpts::format::{load_configuration, parse_configuration, serialize_configuration};
use acmpts_core::samples;
use acmpts_core::star::is_acm;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn acmpts(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_acmpts"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture_arg(name: &str) -> String {
    fixture(name).to_str().unwrap().to_owned()
}

#[test]
fn fixtures_match_bundled_samples() {
    let pairs = [
        ("eleven_points.json", samples::eleven_point_liaison()),
        ("moved_point.json", samples::moved_point_variant()),
        ("six_points.json", samples::six_point_cube()),
        ("twelve_points.json", samples::twelve_point_chain()),
    ];
    for (name, expected) in pairs {
        assert_eq!(load_configuration(&fixture(name)).unwrap().set, expected, "{name}");
    }
}

#[test]
fn serialization_round_trips() {
    for name in ["eleven_points.json", "six_points.json", "diagonal_pair.json"] {
        let config = load_configuration(&fixture(name)).unwrap();
        let text = serialize_configuration(&config.set);
        assert_eq!(parse_configuration(&text).unwrap().set, config.set, "{name}");
    }
}

#[test]
fn check_reports_witness() {
    let out = acmpts(&["check", &fixture_arg("six_points.json")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ACM: false"), "{text}");
    assert!(text.contains("type-ii P=(1,1,1) Q=(2,2,2)"), "{text}");

    let out = acmpts(&["check", &fixture_arg("six_points.json"), "--star-level", "2"]);
    assert!(stdout(&out).contains("star_2: satisfied"));
}

#[test]
fn check_rejects_bad_star_level() {
    let out = acmpts(&["check", &fixture_arg("six_points.json"), "--star-level", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_reports_failing_link() {
    let out = acmpts(&["oracle", &fixture_arg("diagonal_pair.json")]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("CM: false"));
    let out = acmpts(&["oracle", &fixture_arg("eleven_points.json")]);
    assert!(stdout(&out).contains("CM: true"));
}

#[test]
fn hilbert_corner_value() {
    let out = acmpts(&["hilbert", &fixture_arg("eleven_points.json"), "--box", "3,3,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.trim_end().ends_with("11")), "{text}");
    let out = acmpts(&["hilbert", &fixture_arg("eleven_points.json"), "--box", "3,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn path_walks_unit_steps() {
    let out = acmpts(&[
        "path",
        &fixture_arg("eleven_points.json"),
        "--from",
        "1,1,1",
        "--to",
        "2,2,2",
    ]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines, ["(1,1,1)", "(2,1,1)", "(2,1,2)", "(2,2,2)"]);

    let out = acmpts(&["path", &fixture_arg("six_points.json"), "--from", "1,1,2", "--to", "2,2,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_writes_configuration() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("z.json");
    let out = acmpts(&[
        "construct",
        &fixture_arg("liaison_eleven.json"),
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("hf additivity: verified"));
    let z = load_configuration(&target).unwrap().set;
    assert_eq!(z, samples::eleven_point_liaison());

    let target = dir.path().join("layer.json");
    let out = acmpts(&[
        "construct",
        &fixture_arg("layer_single_point.json"),
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(is_acm(&load_configuration(&target).unwrap().set));
}

#[test]
fn construct_rejects_non_vanishing_form() {
    let out = acmpts(&["construct", &fixture_arg("liaison_not_vanishing.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not vanish"));
}

#[test]
fn enumerate_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("r.csv");
    let out = acmpts(&["enumerate", "--grid", "2,2", "--out", csv.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 16);
    assert!(text.starts_with("id,size,star,reisner,inclusion_1,inclusion_2,agree"));
}

#[test]
fn enumerate_rejects_oversized_grid() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("r.csv");
    let out = acmpts(&["enumerate", "--grid", "3,3,4", "--out", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_and_malformed_input_exit_2() {
    let out = acmpts(&["check", "/nonexistent/config.json"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 2, "points": [[1, 0]]}"#).unwrap();
    let out = acmpts(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
