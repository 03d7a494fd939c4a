//! Preset benchmark runs.

use std::path::Path;

use super::{emit_region, run_experiment, CliError, ProblemKind, RunConfig, RunStatus};
use crate::problems::IcKind;
use crate::schemes::SchemeKind;

/// File name of the stable-region table written by [`run_figures`].
pub const REGION_FIGURE: &str = "stable_region.csv";

#[derive(Debug, Clone, PartialEq)]
pub struct FigureRun {
    pub name: String,
    pub config: RunConfig,
}

fn run(
    name: String,
    dir: &Path,
    problem: ProblemKind,
    ic: IcKind,
    scheme: SchemeKind,
    n: usize,
    cfl: f64,
) -> FigureRun {
    let mut config = RunConfig::new(problem, ic, scheme, n, cfl);
    config.output_path = dir.join(format!("{name}.csv"));
    FigureRun { name, config }
}

fn label(scheme: SchemeKind) -> &'static str {
    match scheme {
        SchemeKind::Ftcs => "ftcs",
        SchemeKind::Upwind => "upwind",
        SchemeKind::Ftcsup => "ftcsup",
        SchemeKind::Ftupcs => "ftupcs",
    }
}

/// Every benchmark run, with outputs under `dir`.
///
/// The short Burgers runs (N = 40, three steps) are produced for both the
/// step and the spike with all three schemes.
pub fn figure_runs(dir: &Path) -> Vec<FigureRun> {
    use IcKind::*;
    use ProblemKind::*;
    use SchemeKind::*;
    let mut runs = Vec::new();

    for (tag, cfl) in [("c0.05", 0.05), ("c0.25", 0.25), ("c0.5", 0.5)] {
        let mut r = run(
            format!("sine_ftcs_{tag}"),
            dir,
            Linear,
            Sine,
            Ftcs,
            80,
            cfl,
        );
        r.config.t_final = Some(4.0);
        runs.push(r);
    }
    for scheme in [Ftcs, Ftcsup, Ftupcs] {
        let mut r = run(
            format!("square_{}", label(scheme)),
            dir,
            Linear,
            Square,
            scheme,
            80,
            0.1,
        );
        r.config.t_final = Some(0.1);
        runs.push(r);
    }
    for scheme in [Ftcsup, Ftupcs] {
        let mut r = run(
            format!("bump_{}", label(scheme)),
            dir,
            Linear,
            Bump,
            scheme,
            120,
            0.6,
        );
        r.config.t_final = Some(1.0);
        runs.push(r);
    }
    for scheme in [Ftcs, Ftcsup, Ftupcs] {
        let mut r = run(
            format!("burgers_step_n80_{}", label(scheme)),
            dir,
            Burgers,
            BurgersStep,
            scheme,
            80,
            0.9,
        );
        r.config.steps = Some(6);
        runs.push(r);
    }
    for (ic, ic_tag) in [(BurgersStep, "step"), (Spike, "spike")] {
        for scheme in [Ftcs, Ftcsup, Ftupcs] {
            let mut r = run(
                format!("burgers_{ic_tag}_n40_{}", label(scheme)),
                dir,
                Burgers,
                ic,
                scheme,
                40,
                0.8,
            );
            r.config.steps = Some(3);
            runs.push(r);
        }
    }
    runs
}

/// Writes the region table and every benchmark run into `dir`. Returns one
/// summary line per file.
pub fn run_figures(dir: &Path) -> Result<Vec<String>, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut lines = Vec::new();
    let region = dir.join(REGION_FIGURE);
    emit_region(0.01, 1.0, 100, &region)?;
    lines.push(format!("{}: stable-region thresholds", region.display()));
    for fig in figure_runs(dir) {
        let outcome = run_experiment(&fig.config)?;
        let m = &outcome.manifest;
        let status = match m.status {
            RunStatus::Completed => "completed",
            RunStatus::Blowup => "blowup",
        };
        lines.push(format!(
            "{}: {status}, {} steps, overshoot {:.3e}, undershoot {:.3e}",
            outcome.csv_path.display(),
            m.steps_taken,
            m.oscillation.overshoot,
            m.oscillation.undershoot
        ));
    }
    Ok(lines)
}
