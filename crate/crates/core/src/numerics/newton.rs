//! Newton–Raphson driver for nonlinear systems.

use crate::error::Result;

/// Iteration controls for the Newton–Raphson scheme.
///
/// The iteration cap of 12 follows the reference setup of the nonlinear
/// benchmark; the relative residual tolerance is a solver choice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonSettings {
    pub max_iterations: usize,
    pub relative_residual_tol: f64,
}

impl Default for NewtonSettings {
    fn default() -> Self {
        NewtonSettings {
            max_iterations: 12,
            relative_residual_tol: 1e-6,
        }
    }
}

/// What a Newton run did.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonOutcome {
    pub iterations: usize,
    pub converged: bool,
    /// Euclidean norm of the final residual.
    pub residual_norm: f64,
    /// Euclidean norm of the residual at the initial iterate.
    pub initial_residual_norm: f64,
}

fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Solve R(x) = 0 by Newton–Raphson.
///
/// `residual` evaluates R at an iterate. `jacobian_solve` receives the iterate
/// and the current residual and must return `delta` with J(x) delta = R(x);
/// the update is `x <- x - delta`. Convergence is declared when the residual
/// norm falls below `tol` relative to the initial residual norm. The last
/// iterate is returned whether or not the iteration converged; factorization
/// failures inside `jacobian_solve` propagate.
pub fn newton_solve<R, J>(
    mut residual: R,
    mut jacobian_solve: J,
    x0: Vec<f64>,
    settings: &NewtonSettings,
) -> Result<(Vec<f64>, NewtonOutcome)>
where
    R: FnMut(&[f64]) -> Result<Vec<f64>>,
    J: FnMut(&[f64], &[f64]) -> Result<Vec<f64>>,
{
    let mut x = x0;
    let mut r = residual(&x)?;
    let r0_norm = norm2(&r);
    let mut r_norm = r0_norm;
    let tol = settings.relative_residual_tol * r0_norm;

    if r0_norm == 0.0 {
        return Ok((
            x,
            NewtonOutcome {
                iterations: 0,
                converged: true,
                residual_norm: 0.0,
                initial_residual_norm: 0.0,
            },
        ));
    }

    let mut iterations = 0;
    let mut converged = false;
    for _ in 0..settings.max_iterations {
        let delta = jacobian_solve(&x, &r)?;
        for (xi, di) in x.iter_mut().zip(&delta) {
            *xi -= di;
        }
        iterations += 1;
        r = residual(&x)?;
        r_norm = norm2(&r);
        if r_norm <= tol || r_norm == 0.0 {
            converged = true;
            break;
        }
    }

    Ok((
        x,
        NewtonOutcome {
            iterations,
            converged,
            residual_norm: r_norm,
            initial_residual_norm: r0_norm,
        },
    ))
}
