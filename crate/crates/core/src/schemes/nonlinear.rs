use crate::error::{Error, Result};
use crate::grid::SolutionField;
use crate::problems::Flux;
use crate::scalar::Real;
use crate::smoothness::{local_speed, LocalSpeed};

use super::cfl_limit;

/// Interface speeds `α_{j−1/2}` for `j = 0..=n`, ghosts included.
pub(crate) fn interface_speeds<T: Real, F: Flux<T> + ?Sized>(
    field: &SolutionField<T>,
    flux: &F,
) -> Vec<LocalSpeed<T>> {
    let n = field.len() as isize;
    (0..=n)
        .map(|j| local_speed(field.at(j - 1), field.at(j), flux))
        .collect()
}

/// Largest `|α_{j±1/2}|` over all interfaces of the (ghost-filled) field.
pub fn max_interface_speed<T: Real, F: Flux<T> + ?Sized>(field: &SolutionField<T>, flux: &F) -> T {
    interface_speeds(field, flux)
        .into_iter()
        .fold(T::zero(), |m, s| m.max(s.0.abs()))
}

/// Upwind interface flux: take the state the local speed comes from.
#[inline]
pub(crate) fn upwind_flux<T: Real, F: Flux<T> + ?Sized>(
    u_left: T,
    u_right: T,
    speed: LocalSpeed<T>,
    flux: &F,
) -> T {
    if speed.0 >= T::zero() {
        flux.flux(u_left)
    } else {
        flux.flux(u_right)
    }
}

#[inline]
pub(crate) fn ftcs_cell<T: Real, F: Flux<T> + ?Sized>(
    u_minus: T,
    u_center: T,
    u_plus: T,
    lambda: T,
    flux: &F,
) -> T {
    u_center - lambda * T::lit(0.5) * (flux.flux(u_plus) - flux.flux(u_minus))
}

pub(crate) fn check_cfl<T: Real>(speeds: &[LocalSpeed<T>], lambda: T) -> Result<()> {
    let max = speeds.iter().fold(T::zero(), |m, s| m.max(s.0.abs()));
    let c = lambda * max;
    if c > cfl_limit() {
        return Err(Error::CflViolation(c.as_f64()));
    }
    Ok(())
}

/// `u_j^{n+1} = u_j − (λ/2)(g(u_{j+1}) − g(u_{j−1}))`.
pub fn ftcs_step_nonlinear<T: Real, F: Flux<T> + ?Sized>(
    field: &SolutionField<T>,
    flux: &F,
    lambda: T,
) -> SolutionField<T> {
    let values = (0..field.len())
        .map(|j| {
            let (um, u, up) = field.stencil(j);
            ftcs_cell(um, u, up, lambda, flux)
        })
        .collect();
    field.successor(values, field.time + lambda * field.grid().h())
}

/// Conservative first-order upwind `u_j − λ(F_{j+1/2} − F_{j−1/2})`, with the
/// interface flux taken from the side the local speed points away from.
/// Rejects `λ · max|α| > 1`.
pub fn upwind_step_nonlinear<T: Real, F: Flux<T> + ?Sized>(
    field: &SolutionField<T>,
    flux: &F,
    lambda: T,
) -> Result<SolutionField<T>> {
    let speeds = interface_speeds(field, flux);
    check_cfl(&speeds, lambda)?;
    let n = field.len() as isize;
    let fluxes: Vec<T> = (0..=n)
        .map(|j| upwind_flux(field.at(j - 1), field.at(j), speeds[j as usize], flux))
        .collect();
    let values = field
        .values()
        .iter()
        .enumerate()
        .map(|(j, &u)| u - lambda * (fluxes[j + 1] - fluxes[j]))
        .collect();
    Ok(field.successor(values, field.time + lambda * field.grid().h()))
}
