//! Uniform node-centred grids, solution storage with one ghost node per
//! side, and boundary fill rules.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// How the nodes cover the domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sampling {
    /// Both end points are nodes: `h = (x_max - x_min) / (n - 1)`.
    Closed,
    /// Right end point identified with the left one: `h = (x_max - x_min) / n`.
    /// The last node sits at `x_max - h`.
    Periodic,
}

/// Uniform 1D mesh `x_j = x_min + j h`, `j = 0..n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D<T> {
    x_min: T,
    x_max: T,
    n: usize,
    h: T,
    sampling: Sampling,
}

impl<T: Real> Grid1D<T> {
    /// Closed grid with both end points as nodes.
    pub fn new(x_min: T, x_max: T, n: usize) -> Result<Self> {
        Self::check(x_min, x_max, n)?;
        let h = (x_max - x_min) / T::lit((n - 1) as f64);
        Ok(Self {
            x_min,
            x_max,
            n,
            h,
            sampling: Sampling::Closed,
        })
    }

    /// Grid for periodic data on `[x_min, x_max)`: `n` nodes, the last one at
    /// `x_max - h`, so that wrapping the last node onto the first spans exactly
    /// one period.
    pub fn periodic(x_min: T, x_max: T, n: usize) -> Result<Self> {
        Self::check(x_min, x_max, n)?;
        let h = (x_max - x_min) / T::lit(n as f64);
        Ok(Self {
            x_min,
            x_max: x_min + T::lit((n - 1) as f64) * h,
            n,
            h,
            sampling: Sampling::Periodic,
        })
    }

    /// Grid whose sampling matches the boundary rule.
    pub fn for_boundary(x_min: T, x_max: T, n: usize, rule: BoundaryRule) -> Result<Self> {
        match rule {
            BoundaryRule::Periodic => Self::periodic(x_min, x_max, n),
            BoundaryRule::Outflow => Self::new(x_min, x_max, n),
        }
    }

    fn check(x_min: T, x_max: T, n: usize) -> Result<()> {
        if n < 3 {
            return Err(Error::TooFewNodes(n));
        }
        if !x_min.is_finite() || !x_max.is_finite() || x_min >= x_max {
            return Err(Error::EmptyInterval {
                x_min: x_min.as_f64(),
                x_max: x_max.as_f64(),
            });
        }
        Ok(())
    }

    pub fn x_min(&self) -> T {
        self.x_min
    }

    /// Position of the last node.
    pub fn x_max(&self) -> T {
        self.x_max
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> T {
        self.h
    }

    pub fn sampling(&self) -> Sampling {
        self.sampling
    }

    /// The interval the grid represents. For periodic sampling the right end
    /// is one spacing past the last node.
    pub fn domain(&self) -> (T, T) {
        match self.sampling {
            Sampling::Closed => (self.x_min, self.x_max),
            Sampling::Periodic => (self.x_min, self.x_min + T::lit(self.n as f64) * self.h),
        }
    }

    pub fn node(&self, j: usize) -> T {
        self.x_min + T::lit(j as f64) * self.h
    }

    pub fn nodes(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.n).map(move |j| self.node(j))
    }

    /// Index of the node closest to `x`; ties go to the lower index.
    pub fn nearest_node(&self, x: T) -> usize {
        let mut best = 0;
        let mut best_dist = T::infinity();
        for j in 0..self.n {
            let d = (self.node(j) - x).abs();
            if d < best_dist {
                best = j;
                best_dist = d;
            }
        }
        best
    }
}

/// Ghost-node fill rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryRule {
    /// Wrap around: left ghost copies the last node, right ghost the first.
    Periodic,
    /// Zero-gradient extrapolation.
    Outflow,
}

/// Node values `u_j^n` at one time level, with one ghost node per side.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionField<T> {
    grid: Grid1D<T>,
    values: Vec<T>,
    pub ghost_left: T,
    pub ghost_right: T,
    pub time: T,
}

impl<T: Real> SolutionField<T> {
    /// Wraps interior values. Ghosts start as copies of the end values.
    pub fn new(grid: Grid1D<T>, values: Vec<T>, time: T) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::LengthMismatch {
                len: values.len(),
                n: grid.n(),
            });
        }
        let ghost_left = values[0];
        let ghost_right = values[values.len() - 1];
        Ok(Self {
            grid,
            values,
            ghost_left,
            ghost_right,
            time,
        })
    }

    /// Samples `f` at every node.
    pub fn from_fn(grid: Grid1D<T>, time: T, f: impl Fn(T) -> T) -> Self {
        let values = grid.nodes().map(f).collect();
        Self::new(grid, values, time).expect("length matches grid by construction")
    }

    pub fn grid(&self) -> &Grid1D<T> {
        &self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [T] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at `j` with `j = -1` and `j = n` mapped to the ghosts.
    #[inline]
    pub fn at(&self, j: isize) -> T {
        if j < 0 {
            self.ghost_left
        } else if j as usize >= self.values.len() {
            self.ghost_right
        } else {
            self.values[j as usize]
        }
    }

    /// `(u_{j-1}, u_j, u_{j+1})` using ghosts at the ends.
    #[inline]
    pub fn stencil(&self, j: usize) -> (T, T, T) {
        let j = j as isize;
        (self.at(j - 1), self.at(j), self.at(j + 1))
    }

    /// Fills the ghosts according to `rule`; interior values are untouched.
    pub fn apply_boundary(&mut self, rule: BoundaryRule) {
        let n = self.values.len();
        match rule {
            BoundaryRule::Periodic => {
                self.ghost_left = self.values[n - 1];
                self.ghost_right = self.values[0];
            }
            BoundaryRule::Outflow => {
                self.ghost_left = self.values[0];
                self.ghost_right = self.values[n - 1];
            }
        }
    }

    pub fn with_boundary(mut self, rule: BoundaryRule) -> Self {
        self.apply_boundary(rule);
        self
    }

    /// Same grid and ghosts, new interior values and time.
    pub(crate) fn successor(&self, values: Vec<T>, time: T) -> Self {
        debug_assert_eq!(values.len(), self.values.len());
        Self {
            grid: self.grid,
            values,
            ghost_left: self.ghost_left,
            ghost_right: self.ghost_right,
            time,
        }
    }

    pub fn max_abs(&self) -> T {
        self.values.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }

    pub fn min_max(&self) -> (T, T) {
        self.values
            .iter()
            .fold((T::infinity(), T::neg_infinity()), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            })
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}
