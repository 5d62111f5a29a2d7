//! Constitutive laws: linear (mu, sigma) and an isotropic saturation law
//! expressing the permeability as a function of the field intensity,
//!
//! ```text
//!     mu(h) = mu0 ( 1 + ( 1/(mu_r0 - 1) + |h|/m0 )^-1 ),
//! ```
//!
//! together with the differential permeability needed by Newton–Raphson and
//! the numerically inverted h(b) map needed by the flux-based reference
//! solver.

use crate::error::{Error, Result};
use crate::MU0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MaterialModel {
    Linear {
        /// Relative permeability.
        mu_r: f64,
        /// Conductivity (S/m).
        sigma: f64,
    },
    Saturable {
        /// Relative permeability at the origin.
        mu_r0: f64,
        /// Saturation magnetic field (A/m).
        m0: f64,
        /// Conductivity (S/m).
        sigma: f64,
    },
}

impl MaterialModel {
    pub fn linear(mu_r: f64, sigma: f64) -> Result<Self> {
        if !(mu_r > 0.0 && sigma > 0.0) {
            return Err(Error::invalid("linear material needs mu_r > 0 and sigma > 0"));
        }
        Ok(MaterialModel::Linear { mu_r, sigma })
    }

    pub fn saturable(mu_r0: f64, m0: f64, sigma: f64) -> Result<Self> {
        if mu_r0 <= 1.0 {
            return Err(Error::invalid("saturable material needs mu_r0 > 1"));
        }
        if !(m0 > 0.0 && sigma > 0.0) {
            return Err(Error::invalid("saturable material needs m0 > 0 and sigma > 0"));
        }
        Ok(MaterialModel::Saturable { mu_r0, m0, sigma })
    }

    /// Saturable model with the saturation field given as mu0 * m0 in tesla
    /// (the form quoted for the benchmark, mu0 m0 = 1.31 T).
    pub fn saturable_from_mu0_m0(mu_r0: f64, mu0_m0: f64, sigma: f64) -> Result<Self> {
        Self::saturable(mu_r0, mu0_m0 / MU0, sigma)
    }

    pub fn sigma(&self) -> f64 {
        match *self {
            MaterialModel::Linear { sigma, .. } | MaterialModel::Saturable { sigma, .. } => sigma,
        }
    }

    pub fn resistivity(&self) -> f64 {
        1.0 / self.sigma()
    }

    pub fn is_saturable(&self) -> bool {
        matches!(self, MaterialModel::Saturable { .. })
    }

    /// Permeability at field magnitude |h| (H/m).
    pub fn permeability(&self, h_magnitude: f64) -> f64 {
        debug_assert!(h_magnitude >= 0.0);
        match *self {
            MaterialModel::Linear { mu_r, .. } => MU0 * mu_r,
            MaterialModel::Saturable { mu_r0, m0, .. } => {
                let x = 1.0 / (mu_r0 - 1.0) + h_magnitude / m0;
                MU0 * (1.0 + 1.0 / x)
            }
        }
    }

    /// d(mu)/d|h| (H/m per A/m).
    pub fn permeability_slope(&self, h_magnitude: f64) -> f64 {
        match *self {
            MaterialModel::Linear { .. } => 0.0,
            MaterialModel::Saturable { mu_r0, m0, .. } => {
                let x = 1.0 / (mu_r0 - 1.0) + h_magnitude / m0;
                -MU0 / (m0 * x * x)
            }
        }
    }

    /// Flux density magnitude b(|h|) = mu(|h|) |h| (T).
    pub fn flux_density(&self, h_magnitude: f64) -> f64 {
        self.permeability(h_magnitude) * h_magnitude
    }

    /// Scalar differential permeability d(b)/d|h| = mu + |h| mu'.
    ///
    /// For the saturation law this collapses to the closed form
    /// mu0 (1 + g^2/(mu_r0 - 1)) with g = mu/mu0 - 1, which is manifestly
    /// positive: the law is strictly monotone.
    pub fn differential_permeability_scalar(&self, h_magnitude: f64) -> f64 {
        match *self {
            MaterialModel::Linear { mu_r, .. } => MU0 * mu_r,
            MaterialModel::Saturable { mu_r0, m0, .. } => {
                let x = 1.0 / (mu_r0 - 1.0) + h_magnitude / m0;
                let g = 1.0 / x;
                MU0 * (1.0 + g * g / (mu_r0 - 1.0))
            }
        }
    }

    /// Differential permeability tensor d(b)/d(h) at a field vector:
    /// mu(|h|) I + mu'(|h|) (h x h)/|h|, continuously extended to mu(0) I at
    /// the origin.
    pub fn differential_permeability(&self, h: [f64; 2]) -> [[f64; 2]; 2] {
        let norm = (h[0] * h[0] + h[1] * h[1]).sqrt();
        let mu = self.permeability(norm);
        if norm == 0.0 {
            return [[mu, 0.0], [0.0, mu]];
        }
        let slope = self.permeability_slope(norm);
        let f = slope / norm;
        [
            [mu + f * h[0] * h[0], f * h[0] * h[1]],
            [f * h[1] * h[0], mu + f * h[1] * h[1]],
        ]
    }

    /// Invert b = mu(|h|) |h|: unique |h| >= 0 with that flux magnitude.
    ///
    /// Safeguarded Newton on the monotone scalar law, converged to 1e-12
    /// relative.
    pub fn field_from_flux(&self, b_magnitude: f64) -> f64 {
        debug_assert!(b_magnitude >= 0.0);
        match *self {
            MaterialModel::Linear { mu_r, .. } => b_magnitude / (MU0 * mu_r),
            MaterialModel::Saturable { .. } => {
                if b_magnitude == 0.0 {
                    return 0.0;
                }
                // mu0 <= mu(h) <= mu(0) brackets the root.
                let mut lo = b_magnitude / self.permeability(0.0);
                let mut hi = b_magnitude / MU0;
                let mut h = 0.5 * (lo + hi);
                for _ in 0..200 {
                    let f = self.flux_density(h) - b_magnitude;
                    if f > 0.0 {
                        hi = h;
                    } else {
                        lo = h;
                    }
                    let df = self.differential_permeability_scalar(h);
                    let mut next = h - f / df;
                    if !(next > lo && next < hi) {
                        next = 0.5 * (lo + hi);
                    }
                    let done = (next - h).abs() <= 1e-12 * h.abs().max(1e-300);
                    h = next;
                    if done {
                        break;
                    }
                }
                h
            }
        }
    }

    /// Reluctivity nu(|b|) = |h|/|b| (m/H), continuously extended at b = 0.
    pub fn reluctivity(&self, b_magnitude: f64) -> f64 {
        match *self {
            MaterialModel::Linear { mu_r, .. } => 1.0 / (MU0 * mu_r),
            MaterialModel::Saturable { .. } => {
                if b_magnitude == 0.0 {
                    1.0 / self.permeability(0.0)
                } else {
                    self.field_from_flux(b_magnitude) / b_magnitude
                }
            }
        }
    }

    /// Differential reluctivity tensor d(h)/d(b) at a flux vector:
    /// nu(|b|) I + nu'(|b|) (b x b)/|b|; the inverse of the differential
    /// permeability tensor evaluated at the matching field.
    pub fn differential_reluctivity(&self, b: [f64; 2]) -> [[f64; 2]; 2] {
        let norm = (b[0] * b[0] + b[1] * b[1]).sqrt();
        let nu = self.reluctivity(norm);
        if norm == 0.0 || !self.is_saturable() {
            return [[nu, 0.0], [0.0, nu]];
        }
        let h = self.field_from_flux(norm);
        let dh_db = 1.0 / self.differential_permeability_scalar(h);
        let dnu_db = (dh_db - nu) / norm;
        let f = dnu_db / norm;
        [
            [nu + f * b[0] * b[0], f * b[0] * b[1]],
            [f * b[1] * b[0], nu + f * b[1] * b[1]],
        ]
    }
}
