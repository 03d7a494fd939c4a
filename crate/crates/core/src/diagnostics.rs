//! Oscillation and accuracy measurements.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{BoundaryRule, SolutionField};
use crate::scalar::Real;

/// Values further than this outside the initial range count as new extrema.
pub const NEW_EXTREMUM_TOLERANCE: f64 = 1e-10;

/// `Σ |u_{j+1} − u_j|` over the interior, plus the wrap-around jump under a
/// periodic rule.
pub fn total_variation<T: Real>(field: &SolutionField<T>, rule: BoundaryRule) -> T {
    let v = field.values();
    let interior = v
        .windows(2)
        .fold(T::zero(), |acc, w| acc + (w[1] - w[0]).abs());
    match rule {
        BoundaryRule::Periodic => interior + (v[0] - v[v.len() - 1]).abs(),
        BoundaryRule::Outflow => interior,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillationReport {
    pub total_variation: f64,
    /// `max u − initial_max`, floored at 0.
    pub overshoot: f64,
    /// `initial_min − min u`, floored at 0.
    pub undershoot: f64,
    /// Strict interior local extrema lying outside the initial range.
    pub new_extrema: usize,
}

pub fn oscillation_report<T: Real>(
    field: &SolutionField<T>,
    initial_min: T,
    initial_max: T,
    rule: BoundaryRule,
) -> OscillationReport {
    let (lo, hi) = field.min_max();
    let tol = T::lit(NEW_EXTREMUM_TOLERANCE);
    let new_extrema = field
        .values()
        .windows(3)
        .filter(|w| {
            let (l, c, r) = (w[0], w[1], w[2]);
            let peak = c > l && c > r && c > initial_max + tol;
            let trough = c < l && c < r && c < initial_min - tol;
            peak || trough
        })
        .count();
    OscillationReport {
        total_variation: total_variation(field, rule).as_f64(),
        overshoot: (hi - initial_max).max(T::zero()).as_f64(),
        undershoot: (initial_min - lo).max(T::zero()).as_f64(),
        new_extrema,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorNorms {
    /// `h Σ |u − u_exact|`.
    pub l1: f64,
    /// `max |u − u_exact|`.
    pub linf: f64,
}

pub fn error_norms<T: Real>(
    numeric: &SolutionField<T>,
    exact: &SolutionField<T>,
) -> Result<ErrorNorms> {
    if numeric.grid() != exact.grid() {
        return Err(Error::GridMismatch);
    }
    let (sum, max) = numeric.values().iter().zip(exact.values()).fold(
        (T::zero(), T::zero()),
        |(s, m), (&u, &e)| {
            let d = (u - e).abs();
            (s + d, m.max(d))
        },
    );
    Ok(ErrorNorms {
        l1: (numeric.grid().h() * sum).as_f64(),
        linf: max.as_f64(),
    })
}

/// Modulus of the FTCS symbol `G(ξ) = 1 − i C sin ξ`, i.e. `sqrt(1 + C² sin² ξ)`.
pub fn amplification_factor<T: Real>(cfl: T, xi: T) -> T {
    let s = cfl * xi.sin();
    (T::one() + s * s).sqrt()
}
