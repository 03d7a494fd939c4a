use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hcl_core::cli::{load_manifest, RunStatus};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcl-lab"))
        .args(args)
        .output()
        .expect("run hcl-lab")
}

fn run_args<'a>(out: &'a str, extra: &[&'a str]) -> Vec<&'a str> {
    let mut args = vec![
        "--problem",
        "linear",
        "--ic",
        "square",
        "--scheme",
        "ftupcs",
        "--n",
        "80",
        "--cfl",
        "0.1",
        "--out",
        out,
    ];
    args.extend_from_slice(extra);
    args
}

fn column(csv: &str, k: usize) -> Vec<f64> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').nth(k).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn runs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = lab(&run_args(p.to_str().unwrap(), &["--tfinal", "0.1"]));
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let csv = fs::read_to_string(&a).unwrap();
    assert_eq!(csv.lines().next(), Some("x,u_numeric,u_exact"));
    assert_eq!(csv.lines().count(), 81);
}

#[test]
fn manifest_records_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("run.csv");
    assert!(lab(&run_args(csv.to_str().unwrap(), &["--tfinal", "0.1"]))
        .status
        .success());
    let m = load_manifest(&dir.path().join("run.manifest.json")).unwrap();
    assert_eq!(m.status, RunStatus::Completed);
    assert_eq!(m.final_time, 0.1);
    assert_eq!(m.config.n, 80);
    assert!(m.error_norms.is_some());
    let counts = m.hybrid_counts.expect("hybrid runs record cell counts");
    assert_eq!(counts.len(), m.steps_taken);
    assert!(counts.iter().all(|c| c.cells_ftcs + c.cells_upwind == 80));
}

#[test]
fn replay_reproduces_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("orig.csv");
    assert!(lab(&run_args(csv.to_str().unwrap(), &["--tfinal", "0.1"]))
        .status
        .success());
    let again = dir.path().join("again.csv");
    let manifest = dir.path().join("orig.manifest.json");
    let out = lab(&[
        "replay",
        "--manifest",
        manifest.to_str().unwrap(),
        "--out",
        again.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(fs::read(&csv).unwrap(), fs::read(&again).unwrap());
}

#[test]
fn zero_final_time_returns_initial_condition() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t0.csv");
    assert!(lab(&run_args(csv.to_str().unwrap(), &["--tfinal", "0"]))
        .status
        .success());
    let text = fs::read_to_string(&csv).unwrap();
    let (x, u, exact) = (column(&text, 0), column(&text, 1), column(&text, 2));
    assert_eq!(u, exact);
    for (x, u) in x.iter().zip(&u) {
        assert_eq!(*u, if x.abs() <= 1.0 / 3.0 { 1.0 } else { 0.0 });
    }
}

#[test]
fn burgers_omits_exact_column() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    let out = lab(&[
        "--problem",
        "burgers",
        "--ic",
        "step",
        "--scheme",
        "ftcsup",
        "--n",
        "80",
        "--cfl",
        "0.9",
        "--steps",
        "6",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().next(), Some("x,u_numeric"));
    let m = load_manifest(&dir.path().join("b.manifest.json")).unwrap();
    assert_eq!(m.steps_taken, 6);
    assert_eq!(m.config.boundary, hcl_core::BoundaryRule::Outflow);
    assert!(m.error_norms.is_none());
}

#[test]
fn region_table() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("region.csv");
    let out = lab(&[
        "region",
        "--cmin",
        "0.1",
        "--cmax",
        "1",
        "--samples",
        "10",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().next(), Some("C,lower_cut,right_cut"));
    let (c, lower, right) = (column(&text, 0), column(&text, 1), column(&text, 2));
    assert_eq!(c.len(), 10);
    assert_eq!((c[0], c[9]), (0.1, 1.0));
    for k in 0..10 {
        assert_eq!(lower[k], -1.0);
        assert!((right[k] - c[k] / (2.0 - c[k])).abs() < 1e-15);
    }
}

fn is_empty_dir(p: &Path) -> bool {
    fs::read_dir(p).unwrap().next().is_none()
}

#[test]
fn invalid_config_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bad.csv");
    let out = lab(&run_args(
        csv.to_str().unwrap(),
        &["--tfinal", "0.1", "--cfl", "1.5"],
    ));
    assert_eq!(out.status.code(), Some(2));
    assert!(is_empty_dir(dir.path()));

    let out = lab(&run_args(
        csv.to_str().unwrap(),
        &["--tfinal", "0.1", "--steps", "3"],
    ));
    assert_eq!(out.status.code(), Some(2));
    let out = lab(&run_args(csv.to_str().unwrap(), &[]));
    assert_eq!(out.status.code(), Some(2));
    assert!(is_empty_dir(dir.path()));
}

#[test]
fn blowup_keeps_partial_output() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("boom.csv");
    let out = lab(&[
        "--problem",
        "linear",
        "--ic",
        "sine",
        "--scheme",
        "ftcs",
        "--n",
        "40",
        "--cfl",
        "1",
        "--tfinal",
        "400",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(hcl_core::cli::EXIT_BLOWUP));
    let m = load_manifest(&dir.path().join("boom.manifest.json")).unwrap();
    assert_eq!(m.status, RunStatus::Blowup);
    let b = m.blowup.unwrap();
    assert_eq!(b.step, m.steps_taken + 1);
    assert!(b.max_abs > b.limit);
    let u = column(&fs::read_to_string(&csv).unwrap(), 1);
    assert!(u.iter().all(|v| v.is_finite() && v.abs() <= b.limit));
}

#[test]
fn figures_writes_every_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = lab(&["figures", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let names = hcl_core::cli::figure_runs(dir.path());
    assert_eq!(names.len(), 17);
    assert!(dir.path().join(hcl_core::cli::REGION_FIGURE).exists());
    for run in names {
        assert!(run.config.output_path.exists(), "{}", run.name);
    }
}
