//! Flux functions, the benchmark initial conditions and the exact solution of
//! linear transport.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{BoundaryRule, Grid1D, SolutionField};
use crate::scalar::Real;

/// Flux `g(u)` of a scalar conservation law `u_t + g(u)_x = 0`.
pub trait Flux<T> {
    fn flux(&self, u: T) -> T;
    fn derivative(&self, u: T) -> T;
}

/// Flux built from a pair of closures.
#[derive(Clone, Copy)]
pub struct FluxFns<F, D> {
    pub flux: F,
    pub derivative: D,
}

impl<T, F: Fn(T) -> T, D: Fn(T) -> T> Flux<T> for FluxFns<F, D> {
    fn flux(&self, u: T) -> T {
        (self.flux)(u)
    }

    fn derivative(&self, u: T) -> T {
        (self.derivative)(u)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProblemSpec<T> {
    /// `g(u) = a u`.
    LinearAdvection { a: T },
    /// `g(u) = u² / 2`.
    Burgers,
}

impl<T: Real> ProblemSpec<T> {
    pub fn is_linear(&self) -> bool {
        matches!(self, ProblemSpec::LinearAdvection { .. })
    }
}

impl<T: Real> Flux<T> for ProblemSpec<T> {
    #[inline]
    fn flux(&self, u: T) -> T {
        match *self {
            ProblemSpec::LinearAdvection { a } => a * u,
            ProblemSpec::Burgers => u * u / T::lit(2.0),
        }
    }

    #[inline]
    fn derivative(&self, u: T) -> T {
        match *self {
            ProblemSpec::LinearAdvection { a } => a,
            ProblemSpec::Burgers => u,
        }
    }
}

pub fn flux_eval<T: Real>(problem: &ProblemSpec<T>, u: T) -> T {
    problem.flux(u)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum IcKind {
    /// `sin(πx)` on `[-1, 1]`.
    Sine,
    /// 1 for `|x| ≤ 1/3`, else 0, on `[-1, 1]`.
    Square,
    /// `exp(-1/(1-x²))` for `|x| < 1`, else 0, on `[-2, 4]`.
    Bump,
    /// 1 for `x ≤ 0.5`, else 0, on `[0, 1]`.
    #[serde(rename = "step")]
    #[value(name = "step")]
    BurgersStep,
    /// 1 at the node nearest `x = 1`, else 0, on `[0, 2]`.
    Spike,
}

impl IcKind {
    pub fn default_domain(self) -> (f64, f64) {
        match self {
            IcKind::Sine | IcKind::Square => (-1.0, 1.0),
            IcKind::Bump => (-2.0, 4.0),
            IcKind::BurgersStep => (0.0, 1.0),
            IcKind::Spike => (0.0, 2.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialCondition<T> {
    pub kind: IcKind,
    pub domain: (T, T),
}

const SPIKE_AT: f64 = 1.0;

impl<T: Real> InitialCondition<T> {
    pub fn new(kind: IcKind) -> Self {
        let (lo, hi) = kind.default_domain();
        Self {
            kind,
            domain: (T::lit(lo), T::lit(hi)),
        }
    }

    pub fn with_domain(kind: IcKind, x_min: T, x_max: T) -> Self {
        Self {
            kind,
            domain: (x_min, x_max),
        }
    }

    /// `u₀(x)`. The spike is the indicator of the grid cell `[x* − h/2, x* + h/2)`
    /// around the node `x*` nearest to 1, so it needs the grid.
    pub fn value_at(&self, x: T, grid: &Grid1D<T>) -> T {
        let one = T::one();
        let zero = T::zero();
        match self.kind {
            IcKind::Sine => (T::PI() * x).sin(),
            IcKind::Square => {
                if x.abs() <= one / T::lit(3.0) {
                    one
                } else {
                    zero
                }
            }
            IcKind::Bump => {
                if x.abs() < one {
                    (-one / (one - x * x)).exp()
                } else {
                    zero
                }
            }
            IcKind::BurgersStep => {
                if x <= T::lit(0.5) {
                    one
                } else {
                    zero
                }
            }
            IcKind::Spike => {
                let centre = grid.node(grid.nearest_node(T::lit(SPIKE_AT)));
                let half = grid.h() / T::lit(2.0);
                if x >= centre - half && x < centre + half {
                    one
                } else {
                    zero
                }
            }
        }
    }

    fn check_domain(&self, grid: &Grid1D<T>) -> Result<()> {
        let (lo, hi) = self.domain;
        let (g_lo, g_hi) = grid.domain();
        let tol = T::lit(1e-12) * (hi - lo).abs().max(T::one());
        if (g_lo - lo).abs() > tol || (g_hi - hi).abs() > tol {
            return Err(Error::DomainMismatch {
                grid_min: g_lo.as_f64(),
                grid_max: g_hi.as_f64(),
                domain_min: lo.as_f64(),
                domain_max: hi.as_f64(),
            });
        }
        Ok(())
    }
}

/// Samples the initial condition at every node of `grid` (time 0).
pub fn sample_ic<T: Real>(ic: &InitialCondition<T>, grid: &Grid1D<T>) -> Result<SolutionField<T>> {
    ic.check_domain(grid)?;
    Ok(SolutionField::from_fn(*grid, T::zero(), |x| {
        ic.value_at(x, grid)
    }))
}

/// Exact solution `u₀(x − a t)` of linear transport. Under a periodic rule
/// the shifted argument is wrapped back into the domain.
pub fn exact_linear<T: Real>(
    ic: &InitialCondition<T>,
    grid: &Grid1D<T>,
    problem: &ProblemSpec<T>,
    t: T,
    rule: BoundaryRule,
) -> Result<SolutionField<T>> {
    let a = match *problem {
        ProblemSpec::LinearAdvection { a } => a,
        ProblemSpec::Burgers => return Err(Error::NoExactSolution),
    };
    ic.check_domain(grid)?;
    let (lo, hi) = ic.domain;
    let period = hi - lo;
    Ok(SolutionField::from_fn(*grid, t, |x| {
        let mut y = x - a * t;
        if rule == BoundaryRule::Periodic {
            y = lo + wrap(y - lo, period);
        }
        ic.value_at(y, grid)
    }))
}

/// `r mod period` in `[0, period)`.
fn wrap<T: Real>(r: T, period: T) -> T {
    let w = r - (r / period).floor() * period;
    if w >= period || w < T::zero() {
        T::zero()
    } else {
        w
    }
}
