use crate::error::{Error, Result};
use crate::grid::{BoundaryRule, SolutionField};
use crate::problems::ProblemSpec;
use crate::scalar::Real;

use super::{max_interface_speed, step, SchemeKind, StepReport};

/// A run aborts once any value exceeds this multiple of the initial max norm.
pub const BLOWUP_FACTOR: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StopRule<T> {
    /// March until `t = T`, truncating the last step.
    FinalTime(T),
    /// Take exactly this many full steps.
    Steps(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarchConfig<T> {
    pub problem: ProblemSpec<T>,
    pub scheme: SchemeKind,
    /// CFL number in `(0, 1]`.
    pub cfl: T,
    pub stop: StopRule<T>,
    pub boundary: BoundaryRule,
}

impl<T: Real> MarchConfig<T> {
    fn validate(&self) -> Result<()> {
        if !(self.cfl > T::zero() && self.cfl <= T::one()) {
            return Err(Error::CflOutOfRange(self.cfl.as_f64()));
        }
        if let ProblemSpec::LinearAdvection { a } = self.problem {
            if a == T::zero() || !a.is_finite() {
                return Err(Error::InvalidSpeed(a.as_f64()));
            }
        }
        if let StopRule::FinalTime(t) = self.stop {
            if !t.is_finite() || t < T::zero() {
                return Err(Error::NegativeTime(t.as_f64()));
            }
        }
        Ok(())
    }

    /// Time step `k` for the next step from `field` (ghosts filled).
    ///
    /// Linear: `k = C h / |a|`. Nonlinear: `k = C h / max|α_{j+1/2}|`,
    /// or `C h` on a field with no wave speed at all.
    pub fn time_step(&self, field: &SolutionField<T>) -> T {
        let h = field.grid().h();
        let speed = match self.problem {
            ProblemSpec::LinearAdvection { a } => a.abs(),
            ProblemSpec::Burgers => max_interface_speed(field, &self.problem),
        };
        if speed > T::zero() {
            self.cfl * h / speed
        } else {
            self.cfl * h
        }
    }
}

/// Marches `initial` according to `config`, handing every accepted step to
/// `on_step`, and returns the final field.
///
/// Fails with [`Error::OscillationBlowup`] as soon as a step produces a
/// non-finite value or one above [`BLOWUP_FACTOR`] times the initial max norm;
/// steps already passed to `on_step` stay valid.
pub fn march<T: Real>(
    config: &MarchConfig<T>,
    initial: &SolutionField<T>,
    mut on_step: impl FnMut(&StepReport<T>),
) -> Result<SolutionField<T>> {
    config.validate()?;
    let limit = T::lit(BLOWUP_FACTOR) * initial.max_abs();
    let h = initial.grid().h();
    let mut field = initial.clone().with_boundary(config.boundary);
    let mut taken = 0usize;
    loop {
        let mut dt = config.time_step(&field);
        let mut final_time = None;
        match config.stop {
            StopRule::Steps(s) => {
                if taken >= s {
                    break;
                }
            }
            StopRule::FinalTime(t_end) => {
                let remaining = t_end - field.time;
                if remaining <= T::time_tolerance() * t_end.max(T::one()) {
                    break;
                }
                if dt >= remaining {
                    dt = remaining;
                    final_time = Some(t_end);
                }
            }
        }

        let mut report = step(&field, config.scheme, &config.problem, dt / h)?;
        taken += 1;
        if let Some(t_end) = final_time {
            report.field.time = t_end;
        }
        let max_abs = report.field.max_abs();
        if !report.field.is_finite() || max_abs > limit {
            return Err(Error::OscillationBlowup {
                step: taken,
                time: report.field.time.as_f64(),
                max_abs: max_abs.as_f64(),
                limit: limit.as_f64(),
            });
        }
        report.field.apply_boundary(config.boundary);
        on_step(&report);
        field = report.field;
    }
    Ok(field)
}

/// Runs [`march`] and collects the trajectory.
pub fn advance<T: Real>(
    config: &MarchConfig<T>,
    initial: &SolutionField<T>,
) -> Result<Vec<StepReport<T>>> {
    let mut trajectory = Vec::new();
    march(config, initial, |r| trajectory.push(r.clone()))?;
    Ok(trajectory)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid1D;
    use crate::problems::{sample_ic, IcKind, InitialCondition};

    fn sine(n: usize) -> SolutionField<f64> {
        let grid = Grid1D::periodic(-1.0, 1.0, n).unwrap();
        sample_ic(&InitialCondition::new(IcKind::Sine), &grid).unwrap()
    }

    fn linear(scheme: SchemeKind, cfl: f64, stop: StopRule<f64>) -> MarchConfig<f64> {
        MarchConfig {
            problem: ProblemSpec::LinearAdvection { a: 1.0 },
            scheme,
            cfl,
            stop,
            boundary: BoundaryRule::Periodic,
        }
    }

    #[test]
    fn zero_final_time_is_empty() {
        let u0 = sine(40);
        let config = linear(SchemeKind::Ftcs, 0.5, StopRule::FinalTime(0.0));
        assert!(advance(&config, &u0).unwrap().is_empty());
        let last = march(&config, &u0, |_| {}).unwrap();
        assert_eq!(last.values(), u0.values());
    }

    #[test]
    fn final_step_lands_on_end_time() {
        let u0 = sine(40);
        let config = linear(SchemeKind::Upwind, 0.7, StopRule::FinalTime(0.33));
        let traj = advance(&config, &u0).unwrap();
        let last = traj.last().unwrap();
        assert!((last.field.time - 0.33).abs() <= 1e-12);
        let full = 0.7 * u0.grid().h();
        assert!(traj[..traj.len() - 1]
            .iter()
            .all(|r| (r.dt - full).abs() < 1e-15));
        assert!(last.dt <= full);
    }

    #[test]
    fn unit_cfl_upwind_round_trip() {
        let u0 = sine(80);
        let config = linear(SchemeKind::Upwind, 1.0, StopRule::FinalTime(4.0));
        let traj = advance(&config, &u0).unwrap();
        assert_eq!(traj.len(), 160);
        for (a, b) in traj.last().unwrap().field.values().iter().zip(u0.values()) {
            assert!((a - b).abs() <= 1e-10);
        }
    }

    #[test]
    fn step_count_mode_and_report_counts() {
        let grid = Grid1D::new(0.0, 1.0, 80).unwrap();
        let u0 = sample_ic(&InitialCondition::new(IcKind::BurgersStep), &grid).unwrap();
        let config = MarchConfig {
            problem: ProblemSpec::Burgers,
            scheme: SchemeKind::Ftcs,
            cfl: 0.9,
            stop: StopRule::Steps(6),
            boundary: BoundaryRule::Outflow,
        };
        let traj = advance(&config, &u0).unwrap();
        assert_eq!(traj.len(), 6);
        assert!(traj
            .iter()
            .all(|r| r.cells_ftcs == 80 && r.cells_upwind == 0));
        let (_, max) = traj.last().unwrap().field.min_max();
        assert!(max > 1.0);
    }

    #[test]
    fn pure_ftcs_blows_up_cleanly() {
        let grid = Grid1D::periodic(-1.0, 1.0, 40).unwrap();
        let u0 = sample_ic(&InitialCondition::new(IcKind::Square), &grid).unwrap();
        let config = linear(SchemeKind::Ftcs, 1.0, StopRule::FinalTime(400.0));
        let mut accepted = 0;
        let err = march(&config, &u0, |_| accepted += 1).unwrap_err();
        match err {
            Error::OscillationBlowup { step, limit, .. } => {
                assert_eq!(step, accepted + 1);
                assert_eq!(limit, 1e6);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let u0 = sine(10);
        let bad_cfl = linear(SchemeKind::Ftcs, 1.5, StopRule::Steps(1));
        assert!(matches!(
            advance(&bad_cfl, &u0),
            Err(Error::CflOutOfRange(_))
        ));
        let mut still = linear(SchemeKind::Ftcs, 0.5, StopRule::Steps(1));
        still.problem = ProblemSpec::LinearAdvection { a: 0.0 };
        assert!(matches!(advance(&still, &u0), Err(Error::InvalidSpeed(_))));
        let back = linear(SchemeKind::Ftcs, 0.5, StopRule::FinalTime(-1.0));
        assert!(matches!(advance(&back, &u0), Err(Error::NegativeTime(_))));
    }
}
