use std::process::{Command, Output};

use ballmag::engine::ball_magnitude;
use ballmag::exact::RatFunc;

fn ballmag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ballmag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn three_ball_text() {
    let out = ballmag(&["ball", "--dim", "3", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim_end(), "R^3/6 + R^2 + 2R + 1");
}

#[test]
fn value_at_zero_is_one() {
    let out = ballmag(&["eval", "--dim", "5", "--radius", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim_end(), "1");
}

#[test]
fn eval_rational_radius() {
    // |B_1| in ℝ³ is 1/6 + 1 + 2 + 1.
    let out = ballmag(&["eval", "--dim", "3", "--radius", "1"]);
    assert_eq!(stdout(&out).trim_end(), "25/6");
    let out = ballmag(&["eval", "--dim", "1", "--radius", "3/2"]);
    assert_eq!(stdout(&out).trim_end(), "5/2");
}

#[test]
fn json_round_trips() {
    for n in ["1", "5", "7"] {
        let out = ballmag(&["ball", "--dim", n, "--format", "json"]);
        assert!(out.status.success());
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let parsed: RatFunc = serde_json::from_value(v["magnitude"].clone()).unwrap();
        let dim: u32 = n.parse().unwrap();
        assert_eq!(parsed, ball_magnitude(dim).unwrap().magnitude);
    }
}

#[test]
fn latex_clears_denominators() {
    let out = ballmag(&["ball", "--dim", "5", "--format", "latex"]);
    assert_eq!(
        stdout(&out).trim_end(),
        "\\frac{R^{5}}{5!} + \\frac{R^{5} + 9R^{4} + 35R^{3} + 72R^{2} + 72R + 24}{8(R + 3)}"
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ballmag(&["ball", "--dim", "4"]).status.code(), Some(2));
    assert_eq!(ballmag(&["ball"]).status.code(), Some(2));
    assert_eq!(ballmag(&["eval", "--dim", "3", "--radius", "x"]).status.code(), Some(2));
    assert_eq!(ballmag(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ballmag(&["capacity", "--dim", "5", "--m", "9"]).status.code(), Some(2));
    assert_eq!(ballmag(&["bessel", "--rows", "3", "--format", "latex"]).status.code(), Some(2));
}

#[test]
fn computation_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, "0,1\n2,0\n").unwrap();
    let out = ballmag(&["finite", "--matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = ballmag(&["approx", "--shape", "cuboid", "--dim", "3", "--radius", "1", "--levels", "4", "--grid-cap", "100"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bessel_rows() {
    let out = ballmag(&["bessel", "--rows", "4"]);
    assert_eq!(stdout(&out), "1\n1 1\n1 3 3\n1 6 15 15\n");
}

#[test]
fn conjecture_and_gap() {
    let out = ballmag(&["conjecture", "--dim", "3"]);
    assert_eq!(stdout(&out).trim_end(), "R^3/6 + R^2 + 2R + 1");
    let out = ballmag(&["conjecture", "--dim", "3", "--gap"]);
    assert_eq!(stdout(&out).trim_end(), "0");
    let out = ballmag(&["conjecture", "--dim", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expansion_terms() {
    let out = ballmag(&["expand", "--dim", "5", "--terms", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "power,coefficient\n5,1/120\n4,1/8\n");
}

#[test]
fn finite_points_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("pts.csv");
    std::fs::write(&pts, "0,0\n1,0\n").unwrap();
    let dest = dir.path().join("out.json");
    let out = ballmag(&[
        "finite",
        "--points",
        pts.to_str().unwrap(),
        "--format",
        "json",
        "--output",
        dest.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&dest).unwrap()).unwrap();
    let m = v["magnitude"].as_f64().unwrap();
    assert!((m - 2.0 / (1.0 + (-1.0f64).exp())).abs() < 1e-12);
}

#[test]
fn approx_writes_csv_table() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("levels.csv");
    let out = ballmag(&[
        "approx", "--shape", "ball", "--dim", "2", "--radius", "1", "--levels", "2", "--csv",
        table.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&table).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("level,points,magnitude"));
    assert!(lines.next().unwrap().starts_with("1,13,"));
    assert_eq!(lines.count(), 1);
}

#[test]
fn deterministic_output() {
    let a = stdout(&ballmag(&["alphas", "--dim", "7", "--format", "json"]));
    let b = stdout(&ballmag(&["alphas", "--dim", "7", "--format", "json"]));
    assert_eq!(a, b);
}

#[test]
fn verify_passes_on_correct_build() {
    let out = ballmag(&["verify"]);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("PASS magnitude n=7")), "{text}");
    assert_eq!(out.status.code(), Some(0), "{text}");
}
