//! One-step update operators and the time-marching driver.
//!
//! Every operator reads a frozen field at `t_n` (ghosts already filled) and
//! returns a new field at `t_n + λh`. The ghosts of the returned field are
//! stale; the driver refills them before the next step.

mod hybrid;
mod linear;
mod march;
mod nonlinear;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

pub use hybrid::hybrid_step;
pub use linear::{ftcs_step_linear, upwind_step_linear};
pub use march::{advance, march, MarchConfig, StopRule, BLOWUP_FACTOR};
pub use nonlinear::{ftcs_step_nonlinear, max_interface_speed, upwind_step_nonlinear};

use crate::error::{Error, Result};
use crate::grid::SolutionField;
use crate::problems::ProblemSpec;
use crate::scalar::{Real, Wind};
use crate::smoothness::Theta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SchemeKind {
    Ftcs,
    Upwind,
    /// FTCS where θ is in the stable set, upwind elsewhere.
    Ftcsup,
    /// FTCS where θ is in the oscillatory interval, upwind elsewhere.
    Ftupcs,
}

impl SchemeKind {
    pub fn hybrid_mode(self) -> Option<HybridMode> {
        match self {
            SchemeKind::Ftcsup => Some(HybridMode::Ftcsup),
            SchemeKind::Ftupcs => Some(HybridMode::Ftupcs),
            SchemeKind::Ftcs | SchemeKind::Upwind => None,
        }
    }
}

/// Which sub-scheme a hybrid picks for a cell whose θ is in the stable set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HybridMode {
    Ftcsup,
    Ftupcs,
}

impl HybridMode {
    #[inline]
    pub fn selects_ftcs(self, stable: bool) -> bool {
        match self {
            HybridMode::Ftcsup => stable,
            HybridMode::Ftupcs => !stable,
        }
    }
}

/// Weights of the upwind-stencil form `u_j^{n+1} = α u_j + β u_upwind`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvexCoefficients<T> {
    pub alpha: T,
    pub beta: T,
}

impl<T: Real> ConvexCoefficients<T> {
    pub fn is_convex(&self) -> bool {
        self.alpha >= T::zero() && self.beta >= T::zero()
    }

    pub fn combine(&self, u_center: T, u_upwind: T) -> T {
        self.alpha * u_center + self.beta * u_upwind
    }
}

/// Rewrites the linear FTCS update at a cell with ratio `theta` as a
/// two-point combination of `u_j` and its upwind neighbour.
///
/// `c_signed = aλ`. With `r = 1/θ` (so `r = Δ₊u/Δ₋u` for positive wind and
/// `Δ₋u/Δ₊u` for negative wind):
///
/// ```text
/// β⁺ = (aλ/2)(r + 1)        β⁻ = (−aλ/2)(1 + r)        α = 1 − β
/// ```
///
/// Fails with [`Error::DegenerateTheta`] for θ = 0 or indeterminate θ.
pub fn convex_coefficients<T: Real>(
    theta: Theta<T>,
    c_signed: T,
    wind: Wind,
) -> Result<ConvexCoefficients<T>> {
    let r = theta.reciprocal().ok_or(Error::DegenerateTheta)?;
    let half = T::lit(0.5);
    let beta = match wind {
        Wind::Positive => c_signed * half * (r + T::one()),
        Wind::Negative => -c_signed * half * (T::one() + r),
    };
    Ok(ConvexCoefficients {
        alpha: T::one() - beta,
        beta,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepReport<T> {
    pub field: SolutionField<T>,
    pub cells_ftcs: usize,
    pub cells_upwind: usize,
    /// Time step `k` used.
    pub dt: T,
}

/// Runs one step of `scheme` for `problem` at mesh ratio `lambda = k/h`.
pub fn step<T: Real>(
    field: &SolutionField<T>,
    scheme: SchemeKind,
    problem: &ProblemSpec<T>,
    lambda: T,
) -> Result<StepReport<T>> {
    let n = field.len();
    let dt = lambda * field.grid().h();
    let report = |field, cells_ftcs| StepReport {
        field,
        cells_ftcs,
        cells_upwind: n - cells_ftcs,
        dt,
    };
    match (scheme, *problem) {
        (SchemeKind::Ftcs, ProblemSpec::LinearAdvection { a }) => {
            Ok(report(ftcs_step_linear(field, a, lambda), n))
        }
        (SchemeKind::Ftcs, ProblemSpec::Burgers) => {
            Ok(report(ftcs_step_nonlinear(field, problem, lambda), n))
        }
        (SchemeKind::Upwind, ProblemSpec::LinearAdvection { a }) => {
            Ok(report(upwind_step_linear(field, a, lambda)?, 0))
        }
        (SchemeKind::Upwind, ProblemSpec::Burgers) => {
            Ok(report(upwind_step_nonlinear(field, problem, lambda)?, 0))
        }
        (SchemeKind::Ftcsup, _) => hybrid_step(field, HybridMode::Ftcsup, problem, lambda),
        (SchemeKind::Ftupcs, _) => hybrid_step(field, HybridMode::Ftupcs, problem, lambda),
    }
}

/// Upper bound on a CFL product before an upwind update is rejected.
#[inline]
pub(crate) fn cfl_limit<T: Real>() -> T {
    T::one() + T::time_tolerance()
}
