//! Shared numerical kernel: quadrature, sparse and dense linear algebra,
//! implicit-Euler time grids and a Newton–Raphson driver.

pub mod dense;
pub mod newton;
pub mod quadrature;
pub mod sparse;

pub use dense::DenseMat;
pub use newton::{newton_solve, NewtonOutcome, NewtonSettings};
pub use quadrature::{gauss_legendre, QuadratureRule};
pub use sparse::{SparseFactor, SparseSystem};

use crate::error::{Error, Result};

/// Uniform time grid for implicit-Euler stepping over [0, t_max].
///
/// The grid has `steps + 1` sample times; time step k lives at `k * dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub t_max: f64,
    pub steps: usize,
}

impl TimeGrid {
    pub fn new(t_max: f64, steps: usize) -> Result<Self> {
        if !(t_max > 0.0) {
            return Err(Error::invalid("t_max must be positive"));
        }
        if steps == 0 {
            return Err(Error::invalid("steps must be positive"));
        }
        Ok(TimeGrid { t_max, steps })
    }

    pub fn dt(&self) -> f64 {
        self.t_max / self.steps as f64
    }

    /// Time of sample `k`, with `k = 0..=steps`.
    pub fn time(&self, k: usize) -> f64 {
        k as f64 * self.dt()
    }

    /// All sample times including t = 0.
    pub fn times(&self) -> Vec<f64> {
        (0..=self.steps).map(|k| self.time(k)).collect()
    }
}
