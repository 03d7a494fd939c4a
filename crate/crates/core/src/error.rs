use thiserror::Error;

/// Errors raised by grid construction, the step operators and the driver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a 3-point stencil needs at least 3 nodes, got {0}")]
    TooFewNodes(usize),

    #[error("empty or inverted interval [{x_min}, {x_max}]")]
    EmptyInterval { x_min: f64, x_max: f64 },

    #[error("CFL number {0} is outside (0, 1]")]
    CflOutOfRange(f64),

    #[error("upwind stability violated: CFL product {0} exceeds 1")]
    CflViolation(f64),

    #[error("sonic cell: local speeds {minus} and {plus} do not share a sign")]
    SonicCell { minus: f64, plus: f64 },

    #[error("smoothness ratio is zero or indeterminate, convex coefficients undefined")]
    DegenerateTheta,

    #[error("field has {len} values but the grid has {n} nodes")]
    LengthMismatch { len: usize, n: usize },

    #[error("fields live on different grids")]
    GridMismatch,

    #[error("grid [{grid_min}, {grid_max}] does not span the domain [{domain_min}, {domain_max}]")]
    DomainMismatch {
        grid_min: f64,
        grid_max: f64,
        domain_min: f64,
        domain_max: f64,
    },

    #[error("no closed-form solution for the Burgers problem")]
    NoExactSolution,

    #[error("advection speed must be nonzero and finite, got {0}")]
    InvalidSpeed(f64),

    #[error("final time must be finite and non-negative, got {0}")]
    NegativeTime(f64),

    #[error(
        "oscillation blowup at step {step} (t = {time}): |u| reached {max_abs}, limit {limit}"
    )]
    OscillationBlowup {
        step: usize,
        time: f64,
        max_abs: f64,
        limit: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
