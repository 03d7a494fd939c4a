use crate::error::Result;
use crate::grid::SolutionField;
use crate::problems::{Flux, ProblemSpec};
use crate::scalar::{Real, Wind};
use crate::smoothness::{linear_region, nonlinear_region, theta};

use super::nonlinear::{check_cfl, ftcs_cell, interface_speeds, upwind_flux};
use super::{linear, HybridMode, StepReport};

/// Per-cell switch between FTCS and first-order upwind driven by the
/// smoothness ratio of the frozen field at `t_n`.
///
/// Linear problems use the wind of `a` and the cuts of
/// [`linear_region`]`(|a|λ)`. Nonlinear problems use the interface speeds
/// `α_{j∓1/2}` of each cell: cells where they do not share a strict sign are
/// sonic and always take the upwind update, the rest are classified against
/// [`nonlinear_region`].
pub fn hybrid_step<T: Real>(
    field: &SolutionField<T>,
    mode: HybridMode,
    problem: &ProblemSpec<T>,
    lambda: T,
) -> Result<StepReport<T>> {
    let (values, cells_ftcs) = match *problem {
        ProblemSpec::LinearAdvection { a } => linear_cells(field, mode, a, lambda)?,
        ProblemSpec::Burgers => nonlinear_cells(field, mode, problem, lambda)?,
    };
    let h = field.grid().h();
    Ok(StepReport {
        field: field.successor(values, field.time + lambda * h),
        cells_ftcs,
        cells_upwind: field.len() - cells_ftcs,
        dt: lambda * h,
    })
}

fn linear_cells<T: Real>(
    field: &SolutionField<T>,
    mode: HybridMode,
    a: T,
    lambda: T,
) -> Result<(Vec<T>, usize)> {
    let c = a * lambda;
    let bounds = linear_region(c.abs())?;
    let wind = Wind::of(a);
    let mut ftcs_count = 0;
    let values = (0..field.len())
        .map(|j| {
            let (um, u, up) = field.stencil(j);
            if mode.selects_ftcs(bounds.contains(theta(um, u, up, wind))) {
                ftcs_count += 1;
                linear::ftcs_cell(um, u, up, c)
            } else {
                linear::upwind_cell(um, u, up, c)
            }
        })
        .collect();
    Ok((values, ftcs_count))
}

fn nonlinear_cells<T: Real, F: Flux<T>>(
    field: &SolutionField<T>,
    mode: HybridMode,
    flux: &F,
    lambda: T,
) -> Result<(Vec<T>, usize)> {
    let speeds = interface_speeds(field, flux);
    check_cfl(&speeds, lambda)?;
    let mut ftcs_count = 0;
    let values = (0..field.len())
        .map(|j| {
            let (um, u, up) = field.stencil(j);
            let (left, right) = (speeds[j], speeds[j + 1]);
            let use_ftcs = match nonlinear_region(left, right, lambda) {
                Ok(bounds) => {
                    let stable = bounds.contains(theta(um, u, up, Wind::of(right.0)));
                    mode.selects_ftcs(stable)
                }
                // sonic
                Err(_) => false,
            };
            if use_ftcs {
                ftcs_count += 1;
                ftcs_cell(um, u, up, lambda, flux)
            } else {
                u - lambda * (upwind_flux(u, up, right, flux) - upwind_flux(um, u, left, flux))
            }
        })
        .collect();
    Ok((values, ftcs_count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::grid::{BoundaryRule, Grid1D};
    use crate::schemes::{ftcs_step_linear, upwind_step_linear, upwind_step_nonlinear};

    fn field(values: &[f64], rule: BoundaryRule) -> SolutionField<f64> {
        let grid = Grid1D::new(0.0, 1.0, values.len()).unwrap();
        SolutionField::new(grid, values.to_vec(), 0.0)
            .unwrap()
            .with_boundary(rule)
    }

    fn ramp() -> SolutionField<f64> {
        let grid = Grid1D::new(0.0, 1.0, 12).unwrap();
        let mut f = SolutionField::from_fn(grid, 0.0, |x| 2.0 * x + 1.0);
        f.ghost_left = 1.0 - 2.0 * grid.h();
        f.ghost_right = 3.0 + 2.0 * grid.h();
        f
    }

    #[test]
    fn monotone_data_is_all_ftcs_under_ftcsup() {
        let f = ramp();
        let linear = ProblemSpec::LinearAdvection { a: 1.0 };
        for lambda in [0.1, 0.5, 0.9] {
            let r = hybrid_step(&f, HybridMode::Ftcsup, &linear, lambda).unwrap();
            assert_eq!((r.cells_ftcs, r.cells_upwind), (12, 0));
            assert_eq!(r.field, ftcs_step_linear(&f, 1.0, lambda));

            let r = hybrid_step(&f, HybridMode::Ftupcs, &linear, lambda).unwrap();
            assert_eq!((r.cells_ftcs, r.cells_upwind), (0, 12));
            assert_eq!(r.field, upwind_step_linear(&f, 1.0, lambda).unwrap());
        }
    }

    #[test]
    fn square_wave_single_step() {
        let mut values = vec![0.0; 20];
        values[6..13].iter_mut().for_each(|v| *v = 1.0);
        let f = field(&values, BoundaryRule::Periodic);
        let linear = ProblemSpec::LinearAdvection { a: 1.0 };
        let lambda = 0.1;

        let up = hybrid_step(&f, HybridMode::Ftcsup, &linear, lambda).unwrap();
        for &v in up.field.values() {
            assert!((0.0..=1.0).contains(&v), "{v}");
        }

        let down = hybrid_step(&f, HybridMode::Ftupcs, &linear, lambda).unwrap();
        let ftcs = ftcs_step_linear(&f, 1.0, lambda);
        let bounds = linear_region(lambda).unwrap();
        let mut oscillatory = 0;
        for j in 0..f.len() {
            let (um, u, up) = f.stencil(j);
            if !bounds.contains(theta(um, u, up, Wind::Positive)) {
                oscillatory += 1;
                assert_eq!(down.field.values()[j], ftcs.values()[j]);
            }
        }
        assert_eq!(oscillatory, down.cells_ftcs);
        assert!(oscillatory > 0);
        // the top of the right jump overshoots
        assert!(down.field.values()[12] > 1.0);
        assert_eq!(up.cells_ftcs, down.cells_upwind);
    }

    #[test]
    fn nonlinear_sonic_cells_go_upwind() {
        let f = field(&[-1.0, -0.5, 0.5, 1.0], BoundaryRule::Outflow);
        for mode in [HybridMode::Ftcsup, HybridMode::Ftupcs] {
            let r = hybrid_step(&f, mode, &ProblemSpec::Burgers, 0.5).unwrap();
            // cells 1 and 2 straddle the sonic point
            let upwind = upwind_step_nonlinear(&f, &ProblemSpec::Burgers, 0.5).unwrap();
            assert_eq!(r.field.values()[1], upwind.values()[1]);
            assert_eq!(r.field.values()[2], upwind.values()[2]);
        }
    }

    #[test]
    fn linear_hybrid_rejects_cfl_above_one() {
        let f = ramp();
        let linear = ProblemSpec::LinearAdvection { a: 2.0 };
        assert!(matches!(
            hybrid_step(&f, HybridMode::Ftcsup, &linear, 0.6),
            Err(Error::CflOutOfRange(_))
        ));
    }
}
