use crate::error::{Error, Result};
use crate::grid::SolutionField;
use crate::scalar::Real;

use super::cfl_limit;

#[inline]
pub(crate) fn ftcs_cell<T: Real>(u_minus: T, u_center: T, u_plus: T, c_signed: T) -> T {
    u_center - c_signed * T::lit(0.5) * (u_plus - u_minus)
}

#[inline]
pub(crate) fn upwind_cell<T: Real>(u_minus: T, u_center: T, u_plus: T, c_signed: T) -> T {
    if c_signed >= T::zero() {
        u_center - c_signed * (u_center - u_minus)
    } else {
        u_center - c_signed * (u_plus - u_center)
    }
}

/// `u_j^{n+1} = u_j − (aλ/2)(u_{j+1} − u_{j−1})`.
pub fn ftcs_step_linear<T: Real>(field: &SolutionField<T>, a: T, lambda: T) -> SolutionField<T> {
    let c = a * lambda;
    let values = (0..field.len())
        .map(|j| {
            let (um, u, up) = field.stencil(j);
            ftcs_cell(um, u, up, c)
        })
        .collect();
    field.successor(values, field.time + lambda * field.grid().h())
}

/// First-order upwind for constant speed `a`. Rejects `|a|λ > 1`.
pub fn upwind_step_linear<T: Real>(
    field: &SolutionField<T>,
    a: T,
    lambda: T,
) -> Result<SolutionField<T>> {
    let c = a * lambda;
    if c.abs() > cfl_limit() {
        return Err(Error::CflViolation(c.abs().as_f64()));
    }
    let values = (0..field.len())
        .map(|j| {
            let (um, u, up) = field.stencil(j);
            upwind_cell(um, u, up, c)
        })
        .collect();
    Ok(field.successor(values, field.time + lambda * field.grid().h()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{BoundaryRule, Grid1D};

    fn field(values: &[f64], rule: BoundaryRule) -> SolutionField<f64> {
        let grid = Grid1D::new(0.0, 1.0, values.len()).unwrap();
        SolutionField::new(grid, values.to_vec(), 0.0)
            .unwrap()
            .with_boundary(rule)
    }

    #[test]
    fn ftcs_examples() {
        let f = field(&[2.5; 6], BoundaryRule::Periodic);
        assert_eq!(ftcs_step_linear(&f, 1.0, 0.7).values(), &[2.5; 6]);

        let f = field(&[0.0, 1.0, 2.0], BoundaryRule::Outflow);
        assert_eq!(ftcs_step_linear(&f, 1.0, 0.5).values()[1], 0.5);
    }

    #[test]
    fn ftcs_is_exact_on_affine_data() {
        let grid = Grid1D::new(-1.0, 1.0, 21).unwrap();
        let mut f = SolutionField::from_fn(grid, 0.0, |x| x);
        f.ghost_left = -1.0 - grid.h();
        f.ghost_right = 1.0 + grid.h();
        let (a, lambda) = (1.3_f64, 0.6);
        let next = ftcs_step_linear(&f, a, lambda);
        let k = lambda * grid.h();
        for (x, u) in grid.nodes().zip(next.values()) {
            assert!((u - (x - a * k)).abs() <= 1e-12);
        }
        assert!((next.time - k).abs() < 1e-16);
    }

    #[test]
    fn upwind_examples() {
        let f = field(&[4.0; 5], BoundaryRule::Outflow);
        assert_eq!(
            upwind_step_linear(&f, 1.0, 0.8).unwrap().values(),
            &[4.0; 5]
        );

        let f = field(&[0.0, 1.0, 7.0], BoundaryRule::Outflow);
        assert_eq!(upwind_step_linear(&f, 1.0, 1.0).unwrap().values()[1], 0.0);
        assert_eq!(upwind_step_linear(&f, 1.0, 0.5).unwrap().values()[1], 0.5);

        // negative speed reads the right neighbour
        assert_eq!(upwind_step_linear(&f, -1.0, 0.5).unwrap().values()[1], 4.0);
    }

    #[test]
    fn upwind_rejects_cfl_above_one() {
        let f = field(&[0.0, 1.0, 0.0], BoundaryRule::Periodic);
        assert!(matches!(
            upwind_step_linear(&f, -2.0, 0.6),
            Err(Error::CflViolation(c)) if (c - 1.2).abs() < 1e-15
        ));
    }
}
