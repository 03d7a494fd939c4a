//! Finite-difference laboratory for 1D scalar conservation laws
//! `u_t + g(u)_x = 0`.
//!
//! The crate provides the centred FTCS scheme, first-order upwind, and two
//! hybrids that switch between them cell by cell according to the smoothness
//! ratio θ of the data:
//!
//! * `FTCSUP` applies FTCS only where θ lies in the set on which the FTCS
//!   update is a convex combination of `u_j` and its upwind neighbour, and
//!   upwind elsewhere. It never creates new extrema.
//! * `FTUPCS` does the opposite and exhibits the oscillations FTCS produces.
//!
//! All numerical code is generic over [`Real`] (`f32` or `f64`). The aliases
//! at the crate root fix the scalar to `f64`, which is what the CLI uses.

pub mod cli;
pub mod diagnostics;
pub mod error;
pub mod grid;
pub mod problems;
pub mod scalar;
pub mod schemes;
pub mod smoothness;

pub use error::{Error, Result};
pub use scalar::{Real, Wind};

pub type Grid1D = grid::Grid1D<f64>;
pub type SolutionField = grid::SolutionField<f64>;
pub type ProblemSpec = problems::ProblemSpec<f64>;
pub type InitialCondition = problems::InitialCondition<f64>;
pub type Theta = smoothness::Theta<f64>;
pub type RegionBounds = smoothness::RegionBounds<f64>;
pub type LocalSpeed = smoothness::LocalSpeed<f64>;
pub type ConvexCoefficients = schemes::ConvexCoefficients<f64>;
pub type StepReport = schemes::StepReport<f64>;
pub type MarchConfig = schemes::MarchConfig<f64>;

pub type Grid1DF32 = grid::Grid1D<f32>;
pub type SolutionFieldF32 = grid::SolutionField<f32>;
pub type ProblemSpecF32 = problems::ProblemSpec<f32>;
pub type MarchConfigF32 = schemes::MarchConfig<f32>;

pub use grid::{BoundaryRule, Sampling};
pub use problems::{Flux, IcKind};
pub use schemes::{HybridMode, SchemeKind, StopRule};
