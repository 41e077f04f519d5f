//! End-to-end checks of the command-line interface: exit codes, JSON
//! determinism, seed plumbing, file output, and the recorded-value sweep.

use std::process::Command;

use apolar::report::{cmd_report, verify_against_goldens, InputSpec};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_apolar"))
}

#[test]
fn report_json_is_byte_identical_across_runs() {
    let run = || {
        let out = bin()
            .args([
                "report",
                "--example",
                "caporali",
                "--format",
                "json",
                "--seed",
                "7",
            ])
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        out.stdout
    };
    let a = run();
    let b = run();
    assert!(!a.is_empty());
    assert_eq!(a, b, "same input and seed must give byte-identical JSON");
    let text: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(text["seed"], 7);
    assert_eq!(text["input"]["example"], "caporali");
    assert_eq!(text["analyses"]["hilbert"]["hilbert"][2], 4);
}

#[test]
fn parse_and_precondition_errors_exit_with_two() {
    let out = bin()
        .args(["hilbert", "--poly", "x0 x1", "--nvars", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("implicit multiplication"), "stderr: {err}");

    let out = bin()
        .args(["hilbert", "--example", "nonesuch"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["hilbert", "--poly", "x5^2", "--nvars", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Inhomogeneous input is a precondition error.
    let out = bin()
        .args(["milnor", "--poly", "x0^2+x1", "--nvars", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // A cone is a precondition error for apolar-algebra commands.
    let out = bin()
        .args(["lefschetz", "--poly", "x0^3+x1^3", "--nvars", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seed_falls_back_to_the_environment() {
    let out = bin()
        .args(["report", "--example", "triangle", "--format", "json"])
        .env("APOLAR_SEED", "123")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 123);

    // An explicit flag wins over the environment.
    let out = bin()
        .args([
            "report",
            "--example",
            "triangle",
            "--format",
            "json",
            "--seed",
            "5",
        ])
        .env("APOLAR_SEED", "123")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 5);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join(format!("apolar-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = bin()
        .args([
            "hilbert",
            "--example",
            "fermat:2:4",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let contents = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&contents).unwrap();
    assert_eq!(
        v["analyses"]["hilbert"]["hilbert"],
        serde_json::json!([1, 3, 3, 3, 1])
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_paper_passes_on_the_golden_run_target() {
    let out = bin()
        .args([
            "report",
            "--example",
            "fermat:2:4",
            "--verify-paper",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("all recorded values reproduced"));

    // Unknown fixtures cannot be verified.
    let out = bin()
        .args([
            "report",
            "--poly",
            "x0^2+x1^2",
            "--nvars",
            "2",
            "--verify-paper",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn recorded_values_sweep_over_every_golden_fixture() {
    // In-process sweep (much faster than spawning one process per fixture):
    // the full report of every catalogued fixture must reproduce all of its
    // recorded values.
    for label in apolar::fixtures::golden_labels() {
        let spec = InputSpec {
            example: Some(label.to_string()),
            poly: None,
            nvars: None,
        };
        let report = cmd_report(&spec, 3, 0).unwrap();
        let bad = verify_against_goldens(&report, label).unwrap();
        assert!(bad.is_empty(), "{label}: {bad:?}");
    }
}

#[test]
fn experiment_is_seed_deterministic() {
    let run = |seed: &str| {
        let out = bin()
            .args([
                "experiment",
                "hessian-membership",
                "--samples",
                "4",
                "--nvars",
                "3",
                "--degree",
                "4",
                "--seed",
                seed,
                "--format",
                "json",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("11"), run("11"));
    let v: serde_json::Value = serde_json::from_slice(&run("11")).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 4);
}

#[test]
fn fixtures_listing_names_every_entry() {
    let out = bin().args(["fixtures"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for fx in apolar::fixtures::FIXTURES {
        assert!(text.contains(fx.name), "missing {}", fx.name);
    }
    assert!(text.contains("fermat:<n>:<d>"));
}
