//! 2-D transient and harmonic eddy-current simulation of thin conductive and
//! magnetic sheets.
//!
//! The thin sheet is removed from the 2-D mesh and replaced by a surface
//! (a "crack" with duplicated nodes) carrying a 1-D spectral model of the
//! through-thickness flux diffusion, built from hyperbolic shape functions of
//! the harmonic slab solution at a set of frequencies. Volume-resolved
//! reference solvers (1-D finite differences, 2-D nodal flux formulation) act
//! as independent verification oracles.
//!
//! Modules:
//! - [`numerics`]: quadrature, sparse/dense linear algebra, time grids, Newton.
//! - [`hyperbasis`]: the hyperbolic shape functions and classical impedance
//!   coefficients.
//! - [`materials`]: linear and saturable constitutive laws.
//! - [`slab1d`]: 1-D flux-diffusion solvers on the sheet cross-section.
//! - [`mesh2d`]: structured triangular meshes of the shield benchmark.
//! - [`fem2d`]: the thin-shell-coupled 2-D solver and the volume-resolved
//!   reference solver, probes and losses.

pub mod error;
pub mod fem2d;
pub mod hyperbasis;
pub mod materials;
pub mod mesh2d;
pub mod numerics;
pub mod slab1d;

pub use error::{Error, Result};

/// Vacuum permeability, H/m.
pub const MU0: f64 = 4.0e-7 * std::f64::consts::PI;
