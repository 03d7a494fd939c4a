//! Command-line experiment runner.
//!
//! A run samples an initial condition, marches it with one scheme and writes
//! the solution as CSV next to a JSON manifest describing the run. The
//! manifest embeds the full [`RunConfig`], so `replay` can regenerate the CSV
//! from it.

mod figures;
mod output;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagnostics::{error_norms, oscillation_report, ErrorNorms, OscillationReport};
use crate::grid::{BoundaryRule, Grid1D, SolutionField};
use crate::problems::{exact_linear, sample_ic, IcKind, InitialCondition, ProblemSpec};
use crate::schemes::{march, MarchConfig, SchemeKind, StopRule};
use crate::smoothness::linear_region;

pub use figures::{figure_runs, run_figures, FigureRun, REGION_FIGURE};
pub use output::{
    format_value, manifest_path, write_solution_csv, BlowupInfo, Manifest, RunStatus, StepCounts,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Solver(#[from] crate::Error),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("manifest {path}: {source}")]
    Manifest {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl CliError {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            _ => 1,
        }
    }
}

/// Exit status of a run that diverged (partial output was written).
pub const EXIT_BLOWUP: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Linear,
    Burgers,
}

/// Everything needed to reproduce one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub problem: ProblemKind,
    /// Advection speed; ignored for Burgers.
    pub a: f64,
    pub ic: IcKind,
    pub x_min: f64,
    pub x_max: f64,
    pub scheme: SchemeKind,
    pub n: usize,
    pub cfl: f64,
    pub t_final: Option<f64>,
    pub steps: Option<usize>,
    pub boundary: BoundaryRule,
    pub output_path: PathBuf,
}

impl RunConfig {
    /// Config with the initial condition's default domain and the default
    /// boundary rule for the problem (periodic for linear, outflow for Burgers).
    pub fn new(problem: ProblemKind, ic: IcKind, scheme: SchemeKind, n: usize, cfl: f64) -> Self {
        let (x_min, x_max) = ic.default_domain();
        Self {
            problem,
            a: 1.0,
            ic,
            x_min,
            x_max,
            scheme,
            n,
            cfl,
            t_final: None,
            steps: None,
            boundary: default_boundary(problem),
            output_path: PathBuf::from("solution.csv"),
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |msg: String| Err(CliError::Config(msg));
        match (self.t_final, self.steps) {
            (Some(_), Some(_)) => {
                return bad("give either a final time or a step count, not both".into())
            }
            (None, None) => return bad("a final time or a step count is required".into()),
            (Some(t), None) if !(t >= 0.0 && t.is_finite()) => {
                return bad(format!("final time must be finite and >= 0, got {t}"))
            }
            _ => {}
        }
        if !(self.cfl > 0.0 && self.cfl <= 1.0) {
            return bad(format!("CFL number must be in (0, 1], got {}", self.cfl));
        }
        if self.n < 3 {
            return bad(format!("need at least 3 grid points, got {}", self.n));
        }
        if !(self.x_min.is_finite() && self.x_max.is_finite()) || self.x_min >= self.x_max {
            return bad(format!("empty domain [{}, {}]", self.x_min, self.x_max));
        }
        if self.problem == ProblemKind::Linear && (self.a == 0.0 || !self.a.is_finite()) {
            return bad(format!("advection speed must be nonzero, got {}", self.a));
        }
        Ok(())
    }

    pub fn problem_spec(&self) -> ProblemSpec<f64> {
        match self.problem {
            ProblemKind::Linear => ProblemSpec::LinearAdvection { a: self.a },
            ProblemKind::Burgers => ProblemSpec::Burgers,
        }
    }

    pub fn initial_condition(&self) -> InitialCondition<f64> {
        InitialCondition::with_domain(self.ic, self.x_min, self.x_max)
    }

    pub fn grid(&self) -> Result<Grid1D<f64>, CliError> {
        Ok(Grid1D::for_boundary(
            self.x_min,
            self.x_max,
            self.n,
            self.boundary,
        )?)
    }

    pub fn march_config(&self) -> MarchConfig<f64> {
        let stop = match (self.t_final, self.steps) {
            (_, Some(s)) => StopRule::Steps(s),
            (Some(t), None) => StopRule::FinalTime(t),
            (None, None) => StopRule::Steps(0),
        };
        MarchConfig {
            problem: self.problem_spec(),
            scheme: self.scheme,
            cfl: self.cfl,
            stop,
            boundary: self.boundary,
        }
    }
}

pub fn default_boundary(problem: ProblemKind) -> BoundaryRule {
    match problem {
        ProblemKind::Linear => BoundaryRule::Periodic,
        ProblemKind::Burgers => BoundaryRule::Outflow,
    }
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub manifest: Manifest,
    pub csv_path: PathBuf,
    pub manifest_path: PathBuf,
    pub final_field: SolutionField<f64>,
}

impl RunOutcome {
    pub fn exit_code(&self) -> i32 {
        match self.manifest.status {
            RunStatus::Completed => 0,
            RunStatus::Blowup => EXIT_BLOWUP,
        }
    }
}

/// Runs one experiment and writes its CSV and manifest.
///
/// An invalid config fails before anything is written. A diverging run is not
/// an error: the last accepted field is written and the manifest is flagged.
pub fn run_experiment(config: &RunConfig) -> Result<RunOutcome, CliError> {
    config.validate()?;
    let grid = config.grid()?;
    let ic = config.initial_condition();
    let initial = sample_ic(&ic, &grid)?;
    let (initial_min, initial_max) = initial.min_max();
    let march_config = config.march_config();

    let mut last = initial.clone();
    let mut counts = Vec::new();
    let mut steps_taken = 0usize;
    let hybrid = config.scheme.hybrid_mode().is_some();
    let result = march(&march_config, &initial, |report| {
        steps_taken += 1;
        if hybrid {
            counts.push(StepCounts {
                step: counts.len() + 1,
                cells_ftcs: report.cells_ftcs,
                cells_upwind: report.cells_upwind,
            });
        }
        last = report.field.clone();
    });
    let (status, blowup) = match result {
        Ok(_) => (RunStatus::Completed, None),
        Err(crate::Error::OscillationBlowup {
            step,
            time,
            max_abs,
            limit,
        }) => (
            RunStatus::Blowup,
            Some(BlowupInfo {
                step,
                time,
                max_abs,
                limit,
            }),
        ),
        Err(e) => return Err(e.into()),
    };

    let exact = match config.problem {
        ProblemKind::Linear => Some(exact_linear(
            &ic,
            &grid,
            &config.problem_spec(),
            last.time,
            config.boundary,
        )?),
        ProblemKind::Burgers => None,
    };
    let norms: Option<ErrorNorms> = match &exact {
        Some(e) => Some(error_norms(&last, e)?),
        None => None,
    };
    let oscillation: OscillationReport =
        oscillation_report(&last, initial_min, initial_max, config.boundary);

    let csv_path = config.output_path.clone();
    write_solution_csv(&csv_path, &last, exact.as_ref())?;

    let manifest = Manifest {
        config: config.clone(),
        grid: output::GridInfo::from(&grid),
        status,
        blowup,
        steps_taken,
        final_time: last.time,
        initial_min,
        initial_max,
        oscillation,
        error_norms: norms,
        hybrid_counts: hybrid.then_some(counts),
    };
    let manifest_path = manifest_path(&csv_path);
    manifest.write(&manifest_path)?;

    Ok(RunOutcome {
        manifest,
        csv_path,
        manifest_path,
        final_field: last,
    })
}

/// Writes the stable-region thresholds `C, lower_cut, right_cut` for `samples`
/// evenly spaced CFL numbers in `[c_min, c_max]`.
pub fn emit_region(
    c_min: f64,
    c_max: f64,
    samples: usize,
    output_path: &Path,
) -> Result<(), CliError> {
    if !(c_min > 0.0 && c_min < c_max && c_max <= 1.0) {
        return Err(CliError::Config(format!(
            "need 0 < cmin < cmax <= 1, got cmin = {c_min}, cmax = {c_max}"
        )));
    }
    if samples < 2 {
        return Err(CliError::Config(format!(
            "need at least 2 samples, got {samples}"
        )));
    }
    let mut rows = Vec::with_capacity(samples);
    for i in 0..samples {
        let c = if i == samples - 1 {
            c_max
        } else {
            c_min + (c_max - c_min) * i as f64 / (samples - 1) as f64
        };
        let b = linear_region(c)?;
        rows.push([c, b.lower_cut, b.right_cut]);
    }
    output::write_rows(output_path, "C,lower_cut,right_cut", &rows)
}

#[derive(Debug, Parser)]
#[command(
    name = "hcl-lab",
    version,
    about = "FTCS, upwind and smoothness-switched hybrid schemes for 1D conservation laws",
    args_conflicts_with_subcommands = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the stable-region thresholds as a function of the CFL number.
    Region(RegionArgs),
    /// Re-run the experiment recorded in a manifest.
    Replay(ReplayArgs),
    /// Regenerate every benchmark run into a directory.
    Figures(FiguresArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, value_enum)]
    pub problem: Option<ProblemKind>,
    /// Advection speed for the linear problem.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, value_enum)]
    pub ic: Option<IcKind>,
    #[arg(long, value_enum)]
    pub scheme: Option<SchemeKind>,
    /// Number of grid points.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub cfl: Option<f64>,
    #[arg(long, conflicts_with = "steps")]
    pub tfinal: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    /// Boundary rule; defaults to periodic for linear and outflow for Burgers.
    #[arg(long, value_enum)]
    pub bc: Option<BoundaryRule>,
    /// Override the left end of the initial condition's domain.
    #[arg(long, allow_negative_numbers = true)]
    pub xmin: Option<f64>,
    /// Override the right end of the initial condition's domain.
    #[arg(long, allow_negative_numbers = true)]
    pub xmax: Option<f64>,
    /// Solution CSV path; the manifest goes next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl RunArgs {
    pub fn into_config(self) -> Result<RunConfig, CliError> {
        let missing = |flag: &str| CliError::Config(format!("missing required flag --{flag}"));
        let problem = self.problem.ok_or_else(|| missing("problem"))?;
        let ic = self.ic.ok_or_else(|| missing("ic"))?;
        let scheme = self.scheme.ok_or_else(|| missing("scheme"))?;
        let n = self.n.ok_or_else(|| missing("n"))?;
        let cfl = self.cfl.ok_or_else(|| missing("cfl"))?;
        let out = self.out.ok_or_else(|| missing("out"))?;
        let mut config = RunConfig::new(problem, ic, scheme, n, cfl);
        config.a = self.a;
        config.t_final = self.tfinal;
        config.steps = self.steps;
        if let Some(bc) = self.bc {
            config.boundary = bc;
        }
        if let Some(x) = self.xmin {
            config.x_min = x;
        }
        if let Some(x) = self.xmax {
            config.x_max = x;
        }
        config.output_path = out;
        config.validate()?;
        Ok(config)
    }
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[arg(long, default_value_t = 0.01)]
    pub cmin: f64,
    #[arg(long, default_value_t = 1.0)]
    pub cmax: f64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    #[arg(long)]
    pub manifest: PathBuf,
    /// Write the CSV here instead of the recorded output path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FiguresArgs {
    #[arg(long)]
    pub out_dir: PathBuf,
}

/// Loads the config recorded in a manifest.
pub fn load_manifest(path: &Path) -> Result<Manifest, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|source| CliError::Manifest {
        path: path.to_path_buf(),
        source,
    })
}

pub fn replay(args: &ReplayArgs) -> Result<RunOutcome, CliError> {
    let mut config = load_manifest(&args.manifest)?.config;
    if let Some(out) = &args.out {
        config.output_path = out.clone();
    }
    run_experiment(&config)
}

/// Dispatches a parsed command line and returns the process exit status.
pub fn execute(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Some(Command::Region(args)) => {
            emit_region(args.cmin, args.cmax, args.samples, &args.out)?;
            println!("wrote {}", args.out.display());
            Ok(0)
        }
        Some(Command::Replay(args)) => {
            let outcome = replay(&args)?;
            summarize(&outcome);
            Ok(outcome.exit_code())
        }
        Some(Command::Figures(args)) => {
            for line in run_figures(&args.out_dir)? {
                println!("{line}");
            }
            Ok(0)
        }
        None => {
            let config = cli.run.into_config()?;
            let outcome = run_experiment(&config)?;
            summarize(&outcome);
            Ok(outcome.exit_code())
        }
    }
}

fn summarize(outcome: &RunOutcome) {
    let m = &outcome.manifest;
    if let (RunStatus::Blowup, Some(b)) = (&m.status, &m.blowup) {
        eprintln!(
            "blowup at step {} (t = {}): |u| = {:e}; wrote last accepted step",
            b.step, b.time, b.max_abs
        );
    }
    println!(
        "{} steps to t = {}; overshoot {:e}, undershoot {:e}, new extrema {}; wrote {} and {}",
        m.steps_taken,
        m.final_time,
        m.oscillation.overshoot,
        m.oscillation.undershoot,
        m.oscillation.new_extrema,
        outcome.csv_path.display(),
        outcome.manifest_path.display()
    );
}
