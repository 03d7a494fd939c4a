use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{CliError, RunConfig};
use crate::diagnostics::{ErrorNorms, OscillationReport};
use crate::grid::{Grid1D, Sampling, SolutionField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunStatus {
    Completed,
    Blowup,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlowupInfo {
    /// 1-based index of the rejected step.
    pub step: usize,
    pub time: f64,
    pub max_abs: f64,
    pub limit: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCounts {
    pub step: usize,
    pub cells_ftcs: usize,
    pub cells_upwind: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridInfo {
    pub x_first: f64,
    pub x_last: f64,
    pub h: f64,
    pub n: usize,
    pub sampling: Sampling,
}

impl From<&Grid1D<f64>> for GridInfo {
    fn from(g: &Grid1D<f64>) -> Self {
        Self {
            x_first: g.x_min(),
            x_last: g.x_max(),
            h: g.h(),
            n: g.n(),
            sampling: g.sampling(),
        }
    }
}

/// JSON record written next to every solution CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub config: RunConfig,
    pub grid: GridInfo,
    pub status: RunStatus,
    pub blowup: Option<BlowupInfo>,
    pub steps_taken: usize,
    pub final_time: f64,
    pub initial_min: f64,
    pub initial_max: f64,
    pub oscillation: OscillationReport,
    pub error_norms: Option<ErrorNorms>,
    /// Per-step cell counts; hybrids only.
    pub hybrid_counts: Option<Vec<StepCounts>>,
}

impl Manifest {
    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(self).map_err(|source| CliError::Manifest {
            path: path.to_path_buf(),
            source,
        })?;
        fs::write(path, text + "\n").map_err(|e| CliError::io(path, e))
    }
}

/// `run.csv` -> `run.manifest.json`, in the same directory.
pub fn manifest_path(csv_path: &Path) -> PathBuf {
    csv_path.with_extension("manifest.json")
}

/// 17 significant digits, enough to round-trip an `f64`.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_solution_csv(
    path: &Path,
    field: &SolutionField<f64>,
    exact: Option<&SolutionField<f64>>,
) -> Result<(), CliError> {
    let header = if exact.is_some() {
        "x,u_numeric,u_exact"
    } else {
        "x,u_numeric"
    };
    let rows: Vec<Vec<f64>> = field
        .grid()
        .nodes()
        .enumerate()
        .map(|(j, x)| {
            let mut row = vec![x, field.values()[j]];
            if let Some(e) = exact {
                row.push(e.values()[j]);
            }
            row
        })
        .collect();
    write_rows(path, header, &rows)
}

pub(crate) fn write_rows<R: AsRef<[f64]>>(
    path: &Path,
    header: &str,
    rows: &[R],
) -> Result<(), CliError> {
    let mut out = String::with_capacity(header.len() + 1 + rows.len() * 72);
    out.push_str(header);
    out.push('\n');
    for row in rows {
        for (i, v) in row.as_ref().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", format_value(*v));
        }
        out.push('\n');
    }
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    fs::write(path, out).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_round_trip_through_text() {
        for v in [0.1, -1.0 / 3.0, 1e-300, 123456.789, f64::MIN_POSITIVE] {
            assert_eq!(format_value(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn manifest_sits_next_to_csv() {
        assert_eq!(
            manifest_path(Path::new("out/run.csv")),
            PathBuf::from("out/run.manifest.json")
        );
    }
}
