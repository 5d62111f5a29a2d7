//! 1-D flux-diffusion solvers on the sheet cross-section [-d/2, d/2]:
//! the analytic harmonic solution, the spectral solver built on the
//! hyperbolic shape functions (elementary matrices S and M, implicit Euler,
//! Newton–Raphson for saturable materials), the loss functional, and a
//! fine-grid finite-difference reference used as a verification oracle.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hyperbasis::{psi, BasisSet, SheetSpec, Side};
use crate::materials::MaterialModel;
use crate::numerics::{gauss_legendre, newton_solve, DenseMat, NewtonSettings, TimeGrid};

/// Boundary drive for the slab problem: tangential field traces on the two
/// faces, either harmonic or as sampled waveforms on the time grid.
#[derive(Debug, Clone)]
pub enum SlabBc {
    Harmonic {
        amp_plus: f64,
        phase_plus: f64,
        amp_minus: f64,
        phase_minus: f64,
        frequency: f64,
    },
    Sampled { plus: Vec<f64>, minus: Vec<f64> },
}

impl SlabBc {
    /// Phasor traces (h+, h-) of a harmonic drive.
    pub fn phasors(&self) -> Result<(Complex64, Complex64, f64)> {
        match self {
            SlabBc::Harmonic {
                amp_plus,
                phase_plus,
                amp_minus,
                phase_minus,
                frequency,
            } => Ok((
                Complex64::from_polar(*amp_plus, *phase_plus),
                Complex64::from_polar(*amp_minus, *phase_minus),
                *frequency,
            )),
            SlabBc::Sampled { .. } => Err(Error::invalid("sampled BC has no phasor form")),
        }
    }

    /// Sample both traces on the grid (length steps + 1 including t = 0).
    pub fn sample(&self, grid: &TimeGrid) -> Result<(Vec<f64>, Vec<f64>)> {
        match self {
            SlabBc::Harmonic {
                amp_plus,
                phase_plus,
                amp_minus,
                phase_minus,
                frequency,
            } => {
                let omega = 2.0 * std::f64::consts::PI * frequency;
                let plus = (0..=grid.steps)
                    .map(|k| amp_plus * (omega * grid.time(k) + phase_plus).cos())
                    .collect();
                let minus = (0..=grid.steps)
                    .map(|k| amp_minus * (omega * grid.time(k) + phase_minus).cos())
                    .collect();
                Ok((plus, minus))
            }
            SlabBc::Sampled { plus, minus } => {
                if plus.len() != grid.steps + 1 || minus.len() != grid.steps + 1 {
                    return Err(Error::invalid(format!(
                        "sampled BC length {} does not match grid ({} samples)",
                        plus.len(),
                        grid.steps + 1
                    )));
                }
                Ok((plus.clone(), minus.clone()))
            }
        }
    }
}

/// Analytic harmonic solution h(y) = h+ psi+(y) + h- psi-(y).
pub fn analytic_harmonic(
    sheet: &SheetSpec,
    h_plus: Complex64,
    h_minus: Complex64,
    frequency: f64,
    y: f64,
) -> Result<Complex64> {
    Ok(h_plus * psi(sheet, frequency, Side::Plus, y)?
        + h_minus * psi(sheet, frequency, Side::Minus, y)?)
}

/// The assembled 1-D spectral system: elementary matrices and material.
#[derive(Debug, Clone)]
pub struct SlabSystem {
    pub basis: BasisSet,
    pub material: MaterialModel,
    /// S_pq = integral of theta_p' theta_q' over the thickness (1/m).
    pub stiffness: DenseMat,
    /// M_pq = integral of theta_p theta_q over the thickness (m).
    pub mass: DenseMat,
}

/// Assemble the elementary matrices S and M by composite Gauss quadrature.
///
/// The number of subintervals scales with d/delta of the sharpest basis
/// member so boundary layers stay resolved; at least 20 total points are
/// used.
pub fn assemble_sm(basis: &BasisSet, quad_order: usize) -> Result<(DenseMat, DenseMat)> {
    if quad_order < 2 {
        return Err(Error::invalid("quadrature order must be >= 2"));
    }
    let d = basis.sheet().thickness;
    let delta_min = basis
        .skin_depths()
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    let by_layer = (2.0 * d / delta_min).ceil() as usize;
    let by_count = 20usize.div_ceil(quad_order);
    let nsub = by_layer.max(by_count).max(2);
    let rule = gauss_legendre(quad_order)?;

    let count = basis.len();
    let mut s = DenseMat::zeros(count);
    let mut m = DenseMat::zeros(count);
    // Tabulate on the composite nodes once.
    let mut nodes = Vec::with_capacity(nsub * quad_order);
    let mut weights = Vec::with_capacity(nsub * quad_order);
    let h = d / nsub as f64;
    for i in 0..nsub {
        let a = -0.5 * d + i as f64 * h;
        for (x, w) in rule.points.iter().zip(&rule.weights) {
            nodes.push(a + 0.5 * h * (x + 1.0));
            weights.push(0.5 * h * w);
        }
    }
    let mut theta = vec![vec![0.0; nodes.len()]; count];
    let mut dtheta = vec![vec![0.0; nodes.len()]; count];
    for p in 0..count {
        for (g, &y) in nodes.iter().enumerate() {
            theta[p][g] = basis.eval(p, y)?;
            dtheta[p][g] = basis.eval_deriv(p, y)?;
        }
    }
    for p in 0..count {
        for q in p..count {
            let mut sv = 0.0;
            let mut mv = 0.0;
            for g in 0..nodes.len() {
                sv += weights[g] * dtheta[p][g] * dtheta[q][g];
                mv += weights[g] * theta[p][g] * theta[q][g];
            }
            s.set(p, q, sv);
            s.set(q, p, sv);
            m.set(p, q, mv);
            m.set(q, p, mv);
        }
    }
    Ok((s, m))
}

impl SlabSystem {
    pub fn new(basis: BasisSet, material: MaterialModel, quad_order: usize) -> Result<Self> {
        let (stiffness, mass) = assemble_sm(&basis, quad_order)?;
        Ok(SlabSystem {
            basis,
            material,
            stiffness,
            mass,
        })
    }

    fn linear_mu(&self) -> Result<f64> {
        match self.material {
            MaterialModel::Linear { .. } => Ok(self.material.permeability(0.0)),
            MaterialModel::Saturable { .. } => Err(Error::invalid(
                "linear slab solver requires a linear material",
            )),
        }
    }
}

/// Instantaneous loss rho * h^T S h, in W per unit sheet area.
pub fn instantaneous_loss(system: &SlabSystem, state: &[f64]) -> f64 {
    let rho = system.material.resistivity();
    let sx = system.stiffness.matvec(state);
    rho * state.iter().zip(&sx).map(|(a, b)| a * b).sum::<f64>()
}

/// Stored magnetic energy (1/2) mu h^T M h per unit sheet area (linear
/// material).
pub fn magnetic_energy(system: &SlabSystem, state: &[f64]) -> Result<f64> {
    let mu = system.linear_mu()?;
    let mx = system.mass.matvec(state);
    Ok(0.5 * mu * state.iter().zip(&mx).map(|(a, b)| a * b).sum::<f64>())
}

/// Consistent boundary reactions of the discrete equations at one implicit
/// Euler step: the trace rows of rho S h + mu M (h - h_prev)/dt, which equal
/// (-e_z at +d/2, +e_z at -d/2).
pub fn boundary_reactions(
    system: &SlabSystem,
    state: &[f64],
    state_prev: &[f64],
    dt: f64,
) -> Result<(f64, f64)> {
    let mu = system.linear_mu()?;
    let rho = system.material.resistivity();
    let (tp, tm) = system.basis.trace_indices();
    let sx = system.stiffness.matvec(state);
    let mut rates = vec![0.0; state.len()];
    for i in 0..state.len() {
        rates[i] = (state[i] - state_prev[i]) / dt;
    }
    let mrate = system.mass.matvec(&rates);
    Ok((rho * sx[tp] + mu * mrate[tp], rho * sx[tm] + mu * mrate[tm]))
}

/// Time history of the spectral coefficient vector.
#[derive(Debug, Clone)]
pub struct SlabHistory {
    pub times: Vec<f64>,
    /// states[k] is the 4n coefficient vector at times[k]; states[0] is the
    /// initial condition.
    pub states: Vec<Vec<f64>>,
}

impl SlabHistory {
    /// Reconstructed field h_x at depth y for every sample time.
    pub fn field_at_depth(&self, basis: &BasisSet, y: f64) -> Result<Vec<f64>> {
        self.states
            .iter()
            .map(|s| basis.reconstruct(s, y))
            .collect()
    }
}

/// Per-step Newton statistics for nonlinear runs.
#[derive(Debug, Clone, Copy)]
pub struct StepStats {
    pub iterations: usize,
    pub converged: bool,
}

/// Harmonic spectral solve: (rho S + j omega mu M)[h] = 0 with the two trace
/// coefficients strongly set to the boundary phasors. Returns the complex
/// coefficient vector.
pub fn solve_harmonic_spectral(
    system: &SlabSystem,
    h_plus: Complex64,
    h_minus: Complex64,
    frequency: f64,
) -> Result<Vec<Complex64>> {
    let mu = system.linear_mu()?;
    let rho = system.material.resistivity();
    let omega = 2.0 * std::f64::consts::PI * frequency;
    let count = system.basis.len();
    let (tp, tm) = system.basis.trace_indices();
    let mut a = DenseMat::<Complex64>::zeros(count);
    let mut rhs = vec![Complex64::new(0.0, 0.0); count];
    for i in 0..count {
        for j in 0..count {
            a.set(
                i,
                j,
                Complex64::new(
                    rho * system.stiffness.get(i, j),
                    omega * mu * system.mass.get(i, j),
                ),
            );
        }
    }
    for (row, value) in [(tp, h_plus), (tm, h_minus)] {
        for j in 0..count {
            a.set(row, j, Complex64::new(0.0, 0.0));
        }
        a.set(row, row, Complex64::new(1.0, 0.0));
        rhs[row] = value;
    }
    a.solve(&rhs)
}

/// Effective jump coefficients of the harmonic spectral system, obtained by
/// eliminating the interior coefficients (Schur complement onto the two
/// traces). For a single pair of hyperbolic functions these equal the
/// classical impedance coefficients exactly.
pub fn harmonic_jump_coefficients(
    system: &SlabSystem,
    frequency: f64,
) -> Result<(Complex64, Complex64)> {
    let mu = system.linear_mu()?;
    let rho = system.material.resistivity();
    let omega = 2.0 * std::f64::consts::PI * frequency;
    let count = system.basis.len();
    let (tp, tm) = system.basis.trace_indices();
    let internal = system.basis.internal_indices();
    let entry = |i: usize, j: usize| {
        Complex64::new(
            rho * system.stiffness.get(i, j),
            omega * mu * system.mass.get(i, j),
        )
    };
    // Schur complement Z = A_tt - A_ti A_ii^{-1} A_it on traces (t+, t-).
    let ni = internal.len();
    let mut a_ii = DenseMat::<Complex64>::zeros(ni);
    for (r, &gi) in internal.iter().enumerate() {
        for (c, &gj) in internal.iter().enumerate() {
            a_ii.set(r, c, entry(gi, gj));
        }
    }
    let traces = [tp, tm];
    let mut z = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (tc, &gt) in traces.iter().enumerate() {
        // Column of A_it for this trace.
        let col: Vec<Complex64> = internal.iter().map(|&gi| entry(gi, gt)).collect();
        let x = if ni > 0 { a_ii.solve(&col)? } else { Vec::new() };
        for (tr, &gr) in traces.iter().enumerate() {
            let mut v = entry(gr, gt);
            for (r, &gi) in internal.iter().enumerate() {
                v -= entry(gr, gi) * x[r];
            }
            z[tr][tc] = v;
        }
    }
    // Z maps traces (h+, h-) to reactions (-e+, +e-); in IBC form:
    //   e+ - e- = eta_h (h+ + h-)  ->  eta_h = -(Z11 + Z12)
    //   h+ - h- = -eta_e (e+ + e-) ->  eta_e = 1 / (Z11 - Z12)
    let eta_h = -(z[0][0] + z[0][1]);
    let eta_e = Complex64::new(1.0, 0.0) / (z[0][0] - z[0][1]);
    Ok((eta_h, eta_e))
}

/// Linear transient spectral solve with implicit Euler.
///
/// At each step, (rho S + mu M/dt) h_k = mu M h_{k-1}/dt with the two trace
/// coefficients strongly set to the boundary waveforms. The initial state is
/// zero (with traces matching the t = 0 boundary values) unless supplied.
pub fn solve_transient_spectral(
    system: &SlabSystem,
    bc: &SlabBc,
    grid: &TimeGrid,
    initial: Option<Vec<f64>>,
) -> Result<SlabHistory> {
    let mu = system.linear_mu()?;
    let rho = system.material.resistivity();
    let dt = grid.dt();
    let count = system.basis.len();
    let (tp, tm) = system.basis.trace_indices();
    let (bc_plus, bc_minus) = bc.sample(grid)?;

    let mut a = DenseMat::zeros(count);
    for i in 0..count {
        for j in 0..count {
            a.set(
                i,
                j,
                rho * system.stiffness.get(i, j) + mu * system.mass.get(i, j) / dt,
            );
        }
    }
    for row in [tp, tm] {
        for j in 0..count {
            a.set(row, j, 0.0);
        }
        a.set(row, row, 1.0);
    }

    let mut state = initial.unwrap_or_else(|| vec![0.0; count]);
    if state.len() != count {
        return Err(Error::invalid("initial state length must be 4n"));
    }
    state[tp] = bc_plus[0];
    state[tm] = bc_minus[0];

    let mut history = SlabHistory {
        times: grid.times(),
        states: Vec::with_capacity(grid.steps + 1),
    };
    history.states.push(state.clone());
    for k in 1..=grid.steps {
        let mrate = system.mass.matvec(&state);
        let mut rhs: Vec<f64> = mrate.iter().map(|v| mu * v / dt).collect();
        rhs[tp] = bc_plus[k];
        rhs[tm] = bc_minus[k];
        state = a.solve(&rhs)?;
        history.states.push(state.clone());
    }
    Ok(history)
}

/// Nonlinear transient spectral solve: per step, Newton–Raphson on the weak
/// form with mu(|h_x(y)|) inside the flux integral, re-evaluated by
/// Gauss–Legendre quadrature (20 points by default) at every iteration.
///
/// Non-convergence within the iteration cap is flagged per step in the
/// returned statistics, not fatal.
pub fn solve_transient_nonlinear(
    basis: &BasisSet,
    material: &MaterialModel,
    bc: &SlabBc,
    grid: &TimeGrid,
    newton: &NewtonSettings,
    quad_points: usize,
) -> Result<(SlabHistory, Vec<StepStats>)> {
    if !material.is_saturable() {
        return Err(Error::invalid("nonlinear slab solver needs a saturable material"));
    }
    let (stiffness, _) = assemble_sm(basis, 10)?;
    let rho = material.resistivity();
    let d = basis.sheet().thickness;
    let dt = grid.dt();
    let count = basis.len();
    let (tp, tm) = basis.trace_indices();
    let (bc_plus, bc_minus) = bc.sample(grid)?;

    // Tabulate the shape functions at the quadrature nodes once.
    let rule = gauss_legendre(quad_points.max(2))?;
    let nodes: Vec<f64> = rule.points.iter().map(|x| 0.5 * d * x).collect();
    let weights: Vec<f64> = rule.weights.iter().map(|w| 0.5 * d * w).collect();
    let mut theta = vec![vec![0.0; nodes.len()]; count];
    for p in 0..count {
        for (g, &y) in nodes.iter().enumerate() {
            theta[p][g] = basis.eval(p, y)?;
        }
    }
    let field_at = |state: &[f64], g: usize| -> f64 {
        (0..count).map(|p| state[p] * theta[p][g]).sum()
    };
    // Flux moments Phi_q = integral of mu(|h|) h theta_q dy.
    let flux_vector = |state: &[f64]| -> Vec<f64> {
        let mut phi = vec![0.0; count];
        for g in 0..nodes.len() {
            let h = field_at(state, g);
            let b = material.permeability(h.abs()) * h;
            for q in 0..count {
                phi[q] += weights[g] * b * theta[q][g];
            }
        }
        phi
    };

    let mut state = vec![0.0; count];
    state[tp] = bc_plus[0];
    state[tm] = bc_minus[0];
    let mut history = SlabHistory {
        times: grid.times(),
        states: vec![state.clone()],
    };
    let mut stats = Vec::with_capacity(grid.steps);

    for k in 1..=grid.steps {
        let phi_prev = flux_vector(&state);
        let target_plus = bc_plus[k];
        let target_minus = bc_minus[k];

        let residual = |x: &[f64]| -> Result<Vec<f64>> {
            let phi = flux_vector(x);
            let sx = stiffness.matvec(x);
            let mut r: Vec<f64> = (0..count)
                .map(|i| rho * sx[i] + (phi[i] - phi_prev[i]) / dt)
                .collect();
            r[tp] = x[tp] - target_plus;
            r[tm] = x[tm] - target_minus;
            Ok(r)
        };
        let jacobian_solve = |x: &[f64], r: &[f64]| -> Result<Vec<f64>> {
            let mut jac = DenseMat::zeros(count);
            for i in 0..count {
                for j in 0..count {
                    jac.set(i, j, rho * stiffness.get(i, j));
                }
            }
            for g in 0..nodes.len() {
                let h = field_at(x, g);
                let mu_d = material.differential_permeability_scalar(h.abs());
                let w = weights[g] * mu_d / dt;
                for p in 0..count {
                    let tw = w * theta[p][g];
                    for q in 0..count {
                        jac.add(p, q, tw * theta[q][g]);
                    }
                }
            }
            for row in [tp, tm] {
                for j in 0..count {
                    jac.set(row, j, 0.0);
                }
                jac.set(row, row, 1.0);
            }
            jac.solve(r)
        };

        let (next, outcome) = newton_solve(residual, jacobian_solve, state.clone(), newton)?;
        stats.push(StepStats {
            iterations: outcome.iterations,
            converged: outcome.converged,
        });
        state = next;
        history.states.push(state.clone());
    }
    Ok((history, stats))
}

/// Nodal field history of the finite-difference reference solver.
#[derive(Debug, Clone)]
pub struct FdHistory {
    /// Node depths, -d/2 ..= d/2 (cells + 1 nodes).
    pub y: Vec<f64>,
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
    /// Newton statistics (empty for linear runs).
    pub newton: Vec<StepStats>,
}

impl FdHistory {
    /// Time series at the node closest to depth `y`.
    pub fn series_near(&self, y: f64) -> Vec<f64> {
        let j = self
            .y
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| (*a - y).abs().total_cmp(&(*b - y).abs()))
            .map(|(j, _)| j)
            .unwrap();
        self.states.iter().map(|s| s[j]).collect()
    }
}

fn thomas_solve(lower: &[f64], diag: &[f64], upper: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut x = vec![0.0; n];
    let mut beta = diag[0];
    if beta == 0.0 {
        return Err(Error::FactorizationFailure { pivot: Some(0) });
    }
    x[0] = rhs[0] / beta;
    for j in 1..n {
        c[j] = upper[j - 1] / beta;
        beta = diag[j] - lower[j] * c[j];
        if beta == 0.0 {
            return Err(Error::FactorizationFailure { pivot: Some(j) });
        }
        x[j] = (rhs[j] - lower[j] * x[j - 1]) / beta;
    }
    for j in (0..n - 1).rev() {
        x[j] -= c[j + 1] * x[j + 1];
    }
    Ok(x)
}

/// Second-order central-difference transient reference on a uniform grid,
/// implicit Euler in time, Dirichlet traces. The saturable case runs
/// Newton–Raphson with the nodal differential permeability.
pub fn reference_slab_fd(
    thickness: f64,
    material: &MaterialModel,
    bc: &SlabBc,
    grid: &TimeGrid,
    cells: usize,
    newton: &NewtonSettings,
) -> Result<FdHistory> {
    if cells < 16 {
        return Err(Error::invalid("reference grid needs at least 16 cells"));
    }
    let n = cells + 1;
    let dy = thickness / cells as f64;
    let rho = material.resistivity();
    let dt = grid.dt();
    let (bc_plus, bc_minus) = bc.sample(grid)?;
    let y: Vec<f64> = (0..n).map(|j| -0.5 * thickness + j as f64 * dy).collect();

    let mut state = vec![0.0; n];
    state[n - 1] = bc_plus[0];
    state[0] = bc_minus[0];
    let mut history = FdHistory {
        y,
        times: grid.times(),
        states: vec![state.clone()],
        newton: Vec::new(),
    };

    let k_fd = rho / (dy * dy);
    match material {
        MaterialModel::Linear { .. } => {
            let mu = material.permeability(0.0);
            // Constant tridiagonal operator.
            let mut lower = vec![0.0; n];
            let mut diag = vec![0.0; n];
            let mut upper = vec![0.0; n];
            for j in 1..n - 1 {
                lower[j] = -k_fd;
                upper[j] = -k_fd;
                diag[j] = mu / dt + 2.0 * k_fd;
            }
            diag[0] = 1.0;
            upper[0] = 0.0;
            diag[n - 1] = 1.0;
            lower[n - 1] = 0.0;
            for k in 1..=grid.steps {
                let mut rhs: Vec<f64> = state.iter().map(|h| mu * h / dt).collect();
                rhs[0] = bc_minus[k];
                rhs[n - 1] = bc_plus[k];
                state = thomas_solve(&lower, &diag, &upper, &rhs)?;
                history.states.push(state.clone());
            }
        }
        MaterialModel::Saturable { .. } => {
            for k in 1..=grid.steps {
                let flux_prev: Vec<f64> = state
                    .iter()
                    .map(|&h| material.permeability(h.abs()) * h)
                    .collect();
                let bp = bc_plus[k];
                let bm = bc_minus[k];
                let residual = |x: &[f64]| -> Result<Vec<f64>> {
                    let mut r = vec![0.0; n];
                    for j in 1..n - 1 {
                        let flux = material.permeability(x[j].abs()) * x[j];
                        r[j] = (flux - flux_prev[j]) / dt
                            - k_fd * (x[j + 1] - 2.0 * x[j] + x[j - 1]);
                    }
                    r[0] = x[0] - bm;
                    r[n - 1] = x[n - 1] - bp;
                    Ok(r)
                };
                let jacobian_solve = |x: &[f64], r: &[f64]| -> Result<Vec<f64>> {
                    let mut lower = vec![0.0; n];
                    let mut diag = vec![0.0; n];
                    let mut upper = vec![0.0; n];
                    for j in 1..n - 1 {
                        lower[j] = -k_fd;
                        upper[j] = -k_fd;
                        diag[j] =
                            material.differential_permeability_scalar(x[j].abs()) / dt + 2.0 * k_fd;
                    }
                    diag[0] = 1.0;
                    diag[n - 1] = 1.0;
                    thomas_solve(&lower, &diag, &upper, r)
                };
                let (next, outcome) = newton_solve(residual, jacobian_solve, state.clone(), newton)?;
                history.newton.push(StepStats {
                    iterations: outcome.iterations,
                    converged: outcome.converged,
                });
                state = next;
                history.states.push(state.clone());
            }
        }
    }
    Ok(history)
}

/// Harmonic variant of the finite-difference reference: the complex
/// tridiagonal system (j omega mu I - rho D2) h = 0 with Dirichlet traces.
/// Returns nodal phasors for the same uniform grid.
pub fn reference_slab_fd_harmonic(
    thickness: f64,
    material: &MaterialModel,
    h_plus: Complex64,
    h_minus: Complex64,
    frequency: f64,
    cells: usize,
) -> Result<(Vec<f64>, Vec<Complex64>)> {
    if cells < 16 {
        return Err(Error::invalid("reference grid needs at least 16 cells"));
    }
    let n = cells + 1;
    let dy = thickness / cells as f64;
    let rho = material.resistivity();
    let mu = material.permeability(0.0);
    let omega = 2.0 * std::f64::consts::PI * frequency;
    let y: Vec<f64> = (0..n).map(|j| -0.5 * thickness + j as f64 * dy).collect();

    // Complex Thomas elimination.
    let k_fd = Complex64::new(rho / (dy * dy), 0.0);
    let diag_val = Complex64::new(2.0 * rho / (dy * dy), omega * mu);
    let mut c = vec![Complex64::new(0.0, 0.0); n];
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    // Row 0: identity (h-), rows 1..n-1 interior, row n-1 identity (h+).
    let mut beta = Complex64::new(1.0, 0.0);
    x[0] = h_minus;
    for j in 1..n {
        let (lower, diag, rhs) = if j == n - 1 {
            (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), h_plus)
        } else {
            (-k_fd, diag_val, Complex64::new(0.0, 0.0))
        };
        let upper_prev = if j == 1 { Complex64::new(0.0, 0.0) } else { -k_fd };
        c[j] = upper_prev / beta;
        beta = diag - lower * c[j];
        x[j] = (rhs - lower * x[j - 1]) / beta;
    }
    for j in (0..n - 1).rev() {
        x[j] -= c[j + 1] * x[j + 1];
    }
    Ok((y, x))
}
