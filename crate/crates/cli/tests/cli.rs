use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_coxreg");

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_curve_passes() {
    let o = run(&["verify-paper", "curve"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn line_bundle_on_p2_squared() {
    let o = run(&["cohomology", "--ring", "P(2,2)", "--line-bundle", "-3,0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("h^2(0,0) = 1"), "{out}");
    assert_eq!(out.lines().filter(|l| l.contains("= 0")).count(), 4);
}

#[test]
fn closed_form_json_matches_engine() {
    let engine = run(&[
        "--format",
        "json",
        "cohomology",
        "--ring",
        "P(1,2)",
        "--line-bundle",
        "-2,-1",
        "--twists=-1..=1,0..=1",
    ]);
    let closed = run(&[
        "--format",
        "json",
        "cohomology",
        "--ring",
        "P(1,2)",
        "--line-bundle",
        "-2,-1",
        "--twists=-1..=1,0..=1",
        "--closed-form",
    ]);
    let dims = |o: &Output| -> Vec<(u64, u64)> {
        stdout(o)
            .lines()
            .map(|l| {
                let v: serde_json::Value = serde_json::from_str(l).unwrap();
                (v["i"].as_u64().unwrap(), v["dim"].as_u64().unwrap())
            })
            .collect()
    };
    assert_eq!(dims(&engine), dims(&closed));
    assert_eq!(dims(&engine).len(), 4 * 6);
}

#[test]
fn saturation_recovers_six_generators() {
    let o = run(&["saturate", "--file", &fixture("curve.ideal"), "--against", "irrelevant"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-paper", "theorem"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = [
        "--format",
        "json",
        "regularity",
        "--file",
        &fixture("curve.ideal"),
        "--target",
        "1,5",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn predicted_region_names_its_witness() {
    let o = run(&[
        "regularity",
        "--file",
        &fixture("curve.ideal"),
        "--target",
        "3,6",
        "--predict",
        "--dim-y",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("predicted (3,6)-regular: false"), "{out}");
    assert!(out.contains("u = (2,0), class (0,5)"), "{out}");
}

#[test]
fn usage_errors_exit_with_two() {
    let o = run(&["cohomology", "--ring", "P(2)", "--line-bundle", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("cohomology --ring P(2) --line-bundle 1,1"), "{err}");
    assert_eq!(
        run(&["--field", "GF(4)", "verify-paper", "wahl"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["saturate", "--file", "/nonexistent/x.ideal"]).status.code(),
        Some(2)
    );
}

#[test]
fn unstable_local_cohomology_exits_with_three() {
    let o = run(&[
        "--t-start",
        "1",
        "--t-cap",
        "3",
        "cohomology",
        "--file",
        &fixture("unsaturated.ideal"),
        "--indices",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8(o.stderr).unwrap().contains("raise the cap"));
}

#[test]
fn failed_checks_exit_with_one() {
    // the K3 containment is false in exact arithmetic
    let o = run(&["verify-paper", "cones"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL cones/k3 containment in Q"));
}

#[test]
fn cone_queries() {
    let k3 = fixture("k3.cone");
    let o = run(&["cones", "--file", &k3, "--apex", "2P1;P1+P2;2P2"]);
    assert!(stdout(&o).contains("(2 + 1/3*s6)·H + (2 + 2/3*s6)·C"), "{}", stdout(&o));
    let o = run(&["cones", "--file", &fixture("blowup.cone"), "--subset", "P2,2P1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(": false"));
}

#[test]
fn multiplication_modes_agree() {
    let o = run(&["multmap", "--space", "P(1)", "--l1", "1", "--l2", "3", "--mode", "both"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS modes agree"));
}

#[test]
fn inline_ideals_match_files() {
    let diag = fixture("diagonal-p1.ideal");
    let from_file = run(&["cohomology", "--file", &diag, "--twists=0..2,0..2"]);
    let inline = run(&[
        "cohomology",
        "--ring",
        "P(1,1)",
        "--ideal",
        "x0*y1 - x1*y0",
        "--twists=0..2,0..2",
    ]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, inline.stdout);
    // the diagonal is P1 embedded by O(a + b): a + b + 1 sections
    assert!(stdout(&inline).contains("h^0(2,1) = 4"), "{}", stdout(&inline));
    let bad = run(&["saturate", "--ring", "P(1,1)", "--ideal", "x0 + y0"]);
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8(bad.stderr).unwrap();
    assert!(err.contains("(1,0)") && err.contains("(0,1)"), "{err}");
}
