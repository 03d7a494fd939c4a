//! Smoothness ratio of consecutive gradients and the set of ratios on which
//! an FTCS update is a convex combination of the old centre value and its
//! upwind neighbour.
//!
//! With `Δ₋u_j = u_j − u_{j−1}` and `Δ₊u_j = u_{j+1} − u_j`, the ratio is
//! oriented by the wind:
//!
//! ```text
//! θ_j = Δ₋u_j / Δ₊u_j   (wind ≥ 0)
//! θ_j = Δ₊u_j / Δ₋u_j   (wind < 0)
//! ```
//!
//! For linear transport with CFL number `C = |a|λ ≤ 1` the FTCS update stays
//! between `u_j` and its upwind neighbour iff `θ ≤ −1` or `θ ≥ C / (2 − C)`,
//! for either sign of `a`. For a nonlinear flux the cuts depend on the two
//! interface speeds `α_{j∓1/2}` (see [`nonlinear_region`]).

use crate::error::{Error, Result};
use crate::problems::Flux;
use crate::scalar::{Real, Wind};

/// Smoothness ratio on the extended real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Theta<T> {
    Finite(T),
    PosInfinity,
    NegInfinity,
    /// Both one-sided differences vanish (locally constant data).
    Indeterminate,
}

impl<T: Real> Theta<T> {
    /// Classifies `numerator / denominator`.
    pub fn from_ratio(numerator: T, denominator: T) -> Self {
        if denominator == T::zero() {
            return if numerator > T::zero() {
                Theta::PosInfinity
            } else if numerator < T::zero() {
                Theta::NegInfinity
            } else {
                Theta::Indeterminate
            };
        }
        let q = numerator / denominator;
        if q == T::infinity() {
            Theta::PosInfinity
        } else if q == T::neg_infinity() {
            Theta::NegInfinity
        } else {
            // normalise -0 so that comparisons and printing agree
            Theta::Finite(q + T::zero())
        }
    }

    /// Value on the extended real line; `None` for indeterminate.
    pub fn extended(self) -> Option<T> {
        match self {
            Theta::Finite(v) => Some(v),
            Theta::PosInfinity => Some(T::infinity()),
            Theta::NegInfinity => Some(T::neg_infinity()),
            Theta::Indeterminate => None,
        }
    }

    /// `1/θ`, with `1/±∞ = 0`. `None` for zero or indeterminate.
    pub fn reciprocal(self) -> Option<T> {
        match self {
            Theta::Finite(v) if v == T::zero() => None,
            Theta::Finite(v) => Some(v.recip()),
            Theta::PosInfinity | Theta::NegInfinity => Some(T::zero()),
            Theta::Indeterminate => None,
        }
    }
}

/// Smoothness ratio of the stencil `(u_{j−1}, u_j, u_{j+1})`.
pub fn theta<T: Real>(u_minus: T, u_center: T, u_plus: T, wind: Wind) -> Theta<T> {
    let backward = u_center - u_minus;
    let forward = u_plus - u_center;
    match wind {
        Wind::Positive => Theta::from_ratio(backward, forward),
        Wind::Negative => Theta::from_ratio(forward, backward),
    }
}

/// Thresholds of the non-oscillatory set: `θ ≤ lower_cut` or `θ ≥ right_cut`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionBounds<T> {
    pub lower_cut: T,
    pub right_cut: T,
}

impl<T: Real> RegionBounds<T> {
    /// Whether `theta` lies in the non-oscillatory set. Infinite ratios and
    /// locally constant data are both stable.
    pub fn contains(&self, theta: Theta<T>) -> bool {
        match theta {
            Theta::Finite(v) => v <= self.lower_cut || v >= self.right_cut,
            Theta::PosInfinity | Theta::NegInfinity | Theta::Indeterminate => true,
        }
    }
}

pub fn in_stable_region<T: Real>(theta: Theta<T>, bounds: RegionBounds<T>) -> bool {
    bounds.contains(theta)
}

/// Stable set for linear transport at CFL number `C = |a|λ ∈ (0, 1]`:
/// `(−∞, −1] ∪ [C/(2−C), ∞)`.
pub fn linear_region<T: Real>(cfl: T) -> Result<RegionBounds<T>> {
    if !(cfl > T::zero() && cfl <= T::one()) {
        return Err(Error::CflOutOfRange(cfl.as_f64()));
    }
    let two = T::lit(2.0);
    Ok(RegionBounds {
        lower_cut: -T::one(),
        right_cut: cfl / (two - cfl),
    })
}

/// Secant approximation of the characteristic speed at an interface.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LocalSpeed<T>(pub T);

impl<T: Real> LocalSpeed<T> {
    pub fn value(self) -> T {
        self.0
    }
}

/// `α_{j+1/2} = Δg / Δu` across the interface, or `g'(u_left)` when the
/// states coincide.
pub fn local_speed<T: Real, F: Flux<T> + ?Sized>(u_left: T, u_right: T, flux: &F) -> LocalSpeed<T> {
    let du = u_right - u_left;
    if du != T::zero() {
        LocalSpeed((flux.flux(u_right) - flux.flux(u_left)) / du)
    } else {
        LocalSpeed(flux.derivative(u_left))
    }
}

/// Stable set for nonlinear FTCS at a non-sonic cell with interface speeds
/// `α₋ = α_{j−1/2}` and `α₊ = α_{j+1/2}`.
///
/// Positive speeds: `θ ≤ −α₊/α₋` or `θ ≥ λα₊ / (2 − λα₋)`.
/// Negative speeds: `θ ≤ −α₋/α₊` or `θ ≥ −λα₋ / (2 + λα₊)`.
///
/// Returns [`Error::SonicCell`] when the speeds do not share a strict sign.
pub fn nonlinear_region<T: Real>(
    speed_minus: LocalSpeed<T>,
    speed_plus: LocalSpeed<T>,
    lambda: T,
) -> Result<RegionBounds<T>> {
    let (am, ap) = (speed_minus.0, speed_plus.0);
    let product = am * ap;
    if product.is_nan() || product <= T::zero() {
        return Err(Error::SonicCell {
            minus: am.as_f64(),
            plus: ap.as_f64(),
        });
    }
    let two = T::lit(2.0);
    if am > T::zero() {
        Ok(RegionBounds {
            lower_cut: -(ap / am),
            right_cut: lambda * ap / (two - lambda * am),
        })
    } else {
        Ok(RegionBounds {
            lower_cut: -(am / ap),
            right_cut: -(lambda * am) / (two + lambda * ap),
        })
    }
}
