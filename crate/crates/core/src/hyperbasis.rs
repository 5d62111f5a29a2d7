//! Hyperbolic shape functions across the sheet thickness.
//!
//! The harmonic solution of the 1-D flux diffusion problem in a slab of
//! thickness d is a combination of the two complex profiles
//!
//! ```text
//!     psi_pm(y) = sinh(a d/2 +- a y) / sinh(a d),    a = (1 + j)/delta,
//! ```
//!
//! each equal to 1 on its own face and 0 on the opposite face. Splitting
//! psi into real (cosine) and imaginary (sine) parts at `n` frequencies
//! yields the 4n real shape functions used by the transient thin-shell
//! model. Only the two first cosines carry a boundary trace; all other
//! functions vanish on both faces, which is what couples the 1-D model to
//! the exterior finite elements.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Geometric and material parametrization of a thin sheet.
///
/// `mu` is the permeability used to *build* the basis; for nonlinear runs it
/// is an operating-point value picked off the saturation curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SheetSpec {
    /// Sheet thickness d (m).
    pub thickness: f64,
    /// Magnetic permeability (H/m).
    pub mu: f64,
    /// Electric conductivity (S/m).
    pub sigma: f64,
}

impl SheetSpec {
    pub fn new(thickness: f64, mu: f64, sigma: f64) -> Result<Self> {
        if !(thickness > 0.0 && mu > 0.0 && sigma > 0.0) {
            return Err(Error::invalid("sheet thickness, mu and sigma must be positive"));
        }
        Ok(SheetSpec { thickness, mu, sigma })
    }

    pub fn resistivity(&self) -> f64 {
        1.0 / self.sigma
    }
}

/// Which face of the sheet a profile is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Face at y = +d/2.
    Plus,
    /// Face at y = -d/2.
    Minus,
}

/// Skin depth sqrt(2 / (mu sigma omega)) in meters.
pub fn skin_depth(mu: f64, sigma: f64, frequency: f64) -> Result<f64> {
    if !(mu > 0.0 && sigma > 0.0 && frequency > 0.0) {
        return Err(Error::invalid("skin depth arguments must be positive"));
    }
    let omega = 2.0 * std::f64::consts::PI * frequency;
    Ok((2.0 / (mu * sigma * omega)).sqrt())
}

/// Complex wavenumber a = (1 + j)/delta (1/m).
pub fn wavenumber(mu: f64, sigma: f64, frequency: f64) -> Result<Complex64> {
    let delta = skin_depth(mu, sigma, frequency)?;
    Ok(Complex64::new(1.0, 1.0) / delta)
}

/// tanh(z) for Re z >= 0 without overflow: (1 - e^{-2z}) / (1 + e^{-2z}).
fn tanh_stable(z: Complex64) -> Complex64 {
    let e = (-2.0 * z).exp();
    (Complex64::new(1.0, 0.0) - e) / (Complex64::new(1.0, 0.0) + e)
}

/// psi and d(psi)/dy for one side, evaluated in a scaled form.
///
/// With u = a (d/2 +- y) and v = a d (both with nonnegative real part),
///
/// ```text
///     psi    = e^{u-v} (1 - e^{-2u}) / (1 - e^{-2v}),
///     psi'   = +- a e^{u-v} (1 + e^{-2u}) / (1 - e^{-2v}),
/// ```
///
/// so no intermediate exceeds unit magnitude even for |a| d ~ 1e4, where the
/// plain sinh ratio overflows.
fn psi_scaled(a: Complex64, d: f64, side: Side, y: f64) -> (Complex64, Complex64) {
    let sign = match side {
        Side::Plus => 1.0,
        Side::Minus => -1.0,
    };
    let u = a * (0.5 * d + sign * y);
    let v = a * d;
    let one = Complex64::new(1.0, 0.0);
    let euv = (u - v).exp();
    let e2u = (-2.0 * u).exp();
    let den = one - (-2.0 * v).exp();
    let value = euv * (one - e2u) / den;
    let deriv = sign * a * euv * (one + e2u) / den;
    (value, deriv)
}

fn check_y_in_slab(d: f64, y: f64) -> Result<()> {
    // Tolerate roundoff at the faces.
    if y.abs() > 0.5 * d * (1.0 + 1e-12) + 1e-300 {
        return Err(Error::invalid(format!(
            "y = {y} outside the slab [-d/2, d/2] with d = {d}"
        )));
    }
    Ok(())
}

/// Complex profile psi for one side of the sheet at frequency `f`.
pub fn psi(sheet: &SheetSpec, frequency: f64, side: Side, y: f64) -> Result<Complex64> {
    check_y_in_slab(sheet.thickness, y)?;
    let a = wavenumber(sheet.mu, sheet.sigma, frequency)?;
    Ok(psi_scaled(a, sheet.thickness, side, y).0)
}

/// How the frequencies of the basis pairs relate to the fundamental.
#[derive(Debug, Clone, PartialEq)]
pub enum RankRule {
    /// f_k = (2k - 1) f_1 (odd harmonics).
    Odd,
    /// f_k = 4^(k-1) f_1, halving the skin depth at each rank.
    Geometric,
    /// Explicit frequency list; must have length n and distinct entries.
    Explicit(Vec<f64>),
}

/// The 4n hyperbolic shape functions of a sheet.
///
/// Ordering of the function index p in 0..4n:
/// `[c1+ .. cn+, s1+ .. sn+, c1- .. cn-, s1- .. sn-]`.
#[derive(Debug, Clone)]
pub struct BasisSet {
    sheet: SheetSpec,
    frequencies: Vec<f64>,
    wavenumbers: Vec<Complex64>,
    skin_depths: Vec<f64>,
}

/// Decoded identity of a shape function index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisFunction {
    pub side: Side,
    /// True for a cosine (real-part) function, false for a sine.
    pub cosine: bool,
    /// Harmonic pair index, 1-based.
    pub rank: usize,
}

/// Build the shape-function set from the fundamental frequency and rank rule.
pub fn build_basis(sheet: &SheetSpec, f1: f64, n: usize, rank_rule: &RankRule) -> Result<BasisSet> {
    if n < 1 {
        return Err(Error::invalid("basis needs at least one pair"));
    }
    if !(f1 > 0.0) {
        return Err(Error::invalid("fundamental frequency must be positive"));
    }
    let frequencies: Vec<f64> = match rank_rule {
        RankRule::Odd => (0..n).map(|k| (2 * k + 1) as f64 * f1).collect(),
        RankRule::Geometric => (0..n).map(|k| 4.0_f64.powi(k as i32) * f1).collect(),
        RankRule::Explicit(list) => {
            if list.len() != n {
                return Err(Error::invalid("explicit frequency list length must equal n"));
            }
            list.clone()
        }
    };
    for (i, &f) in frequencies.iter().enumerate() {
        if !(f > 0.0) {
            return Err(Error::invalid("frequencies must be positive"));
        }
        for &g in &frequencies[..i] {
            if f == g {
                return Err(Error::invalid(format!("duplicate basis frequency {f} Hz")));
            }
        }
    }
    let mut wavenumbers = Vec::with_capacity(n);
    let mut skin_depths = Vec::with_capacity(n);
    for &f in &frequencies {
        skin_depths.push(skin_depth(sheet.mu, sheet.sigma, f)?);
        wavenumbers.push(wavenumber(sheet.mu, sheet.sigma, f)?);
    }
    Ok(BasisSet {
        sheet: *sheet,
        frequencies,
        wavenumbers,
        skin_depths,
    })
}

impl BasisSet {
    /// Number of frequency pairs n.
    pub fn pair_count(&self) -> usize {
        self.frequencies.len()
    }

    /// Total number of shape functions, 4n.
    pub fn len(&self) -> usize {
        4 * self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sheet(&self) -> &SheetSpec {
        &self.sheet
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn skin_depths(&self) -> &[f64] {
        &self.skin_depths
    }

    /// Index of the cosine function of `rank` (1-based) on `side`.
    pub fn index_cos(&self, side: Side, rank: usize) -> usize {
        let n = self.pair_count();
        debug_assert!(rank >= 1 && rank <= n);
        match side {
            Side::Plus => rank - 1,
            Side::Minus => 2 * n + rank - 1,
        }
    }

    /// Index of the sine function of `rank` (1-based) on `side`.
    pub fn index_sin(&self, side: Side, rank: usize) -> usize {
        let n = self.pair_count();
        debug_assert!(rank >= 1 && rank <= n);
        match side {
            Side::Plus => n + rank - 1,
            Side::Minus => 3 * n + rank - 1,
        }
    }

    /// Indices of the two unit-trace functions (c1+, c1-), in that order.
    pub fn trace_indices(&self) -> (usize, usize) {
        (
            self.index_cos(Side::Plus, 1),
            self.index_cos(Side::Minus, 1),
        )
    }

    /// All indices except the two trace functions.
    pub fn internal_indices(&self) -> Vec<usize> {
        let (tp, tm) = self.trace_indices();
        (0..self.len()).filter(|&p| p != tp && p != tm).collect()
    }

    /// Decode an index into side / kind / rank.
    pub fn describe(&self, p: usize) -> Result<BasisFunction> {
        let n = self.pair_count();
        if p >= 4 * n {
            return Err(Error::invalid(format!("basis index {p} out of range 0..{}", 4 * n)));
        }
        let block = p / n;
        let rank = p % n + 1;
        Ok(match block {
            0 => BasisFunction { side: Side::Plus, cosine: true, rank },
            1 => BasisFunction { side: Side::Plus, cosine: false, rank },
            2 => BasisFunction { side: Side::Minus, cosine: true, rank },
            _ => BasisFunction { side: Side::Minus, cosine: false, rank },
        })
    }

    fn theta_raw(&self, which: BasisFunction, y: f64, deriv: bool) -> f64 {
        let d = self.sheet.thickness;
        let a_k = self.wavenumbers[which.rank - 1];
        let (v, dv) = psi_scaled(a_k, d, which.side, y);
        if which.cosine {
            if which.rank == 1 {
                if deriv { dv.re } else { v.re }
            } else {
                let a_1 = self.wavenumbers[0];
                let (v1, dv1) = psi_scaled(a_1, d, which.side, y);
                if deriv { dv.re - dv1.re } else { v.re - v1.re }
            }
        } else if deriv {
            dv.im
        } else {
            v.im
        }
    }

    /// Shape function theta_p at depth y (dimensionless).
    pub fn eval(&self, p: usize, y: f64) -> Result<f64> {
        check_y_in_slab(self.sheet.thickness, y)?;
        let which = self.describe(p)?;
        Ok(self.theta_raw(which, y, false))
    }

    /// Analytic derivative d(theta_p)/dy at depth y (1/m).
    pub fn eval_deriv(&self, p: usize, y: f64) -> Result<f64> {
        check_y_in_slab(self.sheet.thickness, y)?;
        let which = self.describe(p)?;
        Ok(self.theta_raw(which, y, true))
    }

    /// Reconstruct h_x(y) from a coefficient vector (length 4n).
    pub fn reconstruct(&self, coefficients: &[f64], y: f64) -> Result<f64> {
        if coefficients.len() != self.len() {
            return Err(Error::invalid("coefficient vector length must be 4n"));
        }
        let mut sum = 0.0;
        for (p, &c) in coefficients.iter().enumerate() {
            if c != 0.0 {
                sum += c * self.eval(p, y)?;
            }
        }
        Ok(sum)
    }
}

/// Complex coefficients of the classical harmonic thin-shell interface
/// conditions:
///
/// ```text
///     jump of tangential h = -eta_e * (mean tangential e) * 2,
///     jump of tangential e =  eta_h * (mean tangential h) * 2,
/// ```
///
/// in the scalar orientation used throughout this crate (x the tangential
/// h direction, z the e direction, + side at y = +d/2). Explicitly,
/// `h+ - h- = -eta_e (e+ + e-)` and `e+ - e- = eta_h (h+ + h-)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImpedanceCoefficients {
    /// eta_h = -(j omega mu / a) tanh(a d / 2)   (V s / (A m) sense).
    pub eta_h: Complex64,
    /// eta_e = (sigma / a) tanh(a d / 2)   (S m sense).
    pub eta_e: Complex64,
    pub frequency: f64,
}

/// Classical thin-shell impedance coefficients at frequency `f`.
pub fn classical_ibc(sheet: &SheetSpec, frequency: f64) -> Result<ImpedanceCoefficients> {
    if !(frequency > 0.0) {
        return Err(Error::invalid("frequency must be positive"));
    }
    let a = wavenumber(sheet.mu, sheet.sigma, frequency)?;
    let omega = 2.0 * std::f64::consts::PI * frequency;
    let t = tanh_stable(a * sheet.thickness * 0.5);
    let eta_h = -Complex64::new(0.0, omega * sheet.mu) / a * t;
    let eta_e = Complex64::new(sheet.sigma, 0.0) / a * t;
    Ok(ImpedanceCoefficients { eta_h, eta_e, frequency })
}

/// Frequency whose skin depth in this sheet material equals `delta`.
pub fn frequency_for_skin_depth(mu: f64, sigma: f64, delta: f64) -> Result<f64> {
    if !(mu > 0.0 && sigma > 0.0 && delta > 0.0) {
        return Err(Error::invalid("arguments must be positive"));
    }
    Ok(1.0 / (std::f64::consts::PI * mu * sigma * delta * delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::MU0;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn sheet_with_delta_ratio(d: f64, delta_over_d: f64) -> (SheetSpec, f64) {
        // Fix mu, sigma and pick the frequency that gives the requested ratio.
        let sheet = SheetSpec::new(d, 1000.0 * MU0, 1.0e6).unwrap();
        let f = frequency_for_skin_depth(sheet.mu, sheet.sigma, delta_over_d * d).unwrap();
        (sheet, f)
    }

    #[test]
    fn skin_depth_shield_parameters() {
        // Shield 1: nonmagnetic, 1 MS/m at 50 Hz.
        let d1 = skin_depth(MU0, 1.0e6, 50.0).unwrap();
        assert!((d1 - 0.0712).abs() / 0.0712 < 5e-3, "got {d1}");
        // Shield 2: mu_r 1000, 10 MS/m at 50 Hz.
        let d2 = skin_depth(1000.0 * MU0, 1.0e7, 50.0).unwrap();
        assert!((d2 - 0.712e-3).abs() / 0.712e-3 < 5e-3, "got {d2}");
        // Pulse benchmark: mu_r 1000, 1 MS/m at 5 kHz -> d/4.44 for d = 1 mm.
        let d3 = skin_depth(1000.0 * MU0, 1.0e6, 5000.0).unwrap();
        assert!((d3 - 0.2252e-3).abs() / 0.2252e-3 < 5e-3, "got {d3}");
        assert!((d3 - 1.0e-3 / 4.44).abs() / d3 < 2e-3);
    }

    #[test]
    fn skin_depth_rejects_nonpositive() {
        assert!(skin_depth(0.0, 1.0, 1.0).is_err());
        assert!(skin_depth(1.0, -1.0, 1.0).is_err());
        assert!(skin_depth(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn psi_boundary_normalization() {
        let (sheet, f) = sheet_with_delta_ratio(1e-3, 1.4);
        let d = sheet.thickness;
        let v = psi(&sheet, f, Side::Plus, 0.5 * d).unwrap();
        assert_abs_diff_eq!(v.re, 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-13);
        let z = psi(&sheet, f, Side::Plus, -0.5 * d).unwrap();
        assert_abs_diff_eq!(z.norm(), 0.0, epsilon = 1e-13);
        let vm = psi(&sheet, f, Side::Minus, -0.5 * d).unwrap();
        assert_abs_diff_eq!(vm.re, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn psi_linear_limit_at_center() {
        let (sheet, f) = sheet_with_delta_ratio(1e-3, 100.0);
        let v = psi(&sheet, f, Side::Plus, 0.0).unwrap();
        assert!((v - Complex64::new(0.5, 0.0)).norm() < 1e-3);
    }

    #[test]
    fn psi_matches_plain_hyperbolic_oracle_at_moderate_argument() {
        // At delta = d the naive sinh ratio is well-conditioned in f64 and
        // serves as an independent evaluation route.
        let (sheet, f) = sheet_with_delta_ratio(1e-3, 1.0);
        let d = sheet.thickness;
        let a = wavenumber(sheet.mu, sheet.sigma, f).unwrap();
        let y = -0.25 * d;
        let oracle = ((a * (0.5 * d + y)).sinh()) / ((a * d).sinh());
        let got = psi(&sheet, f, Side::Plus, y).unwrap();
        assert!((got - oracle).norm() <= 1e-12 * oracle.norm());
    }

    #[test]
    fn psi_rejects_y_outside_slab() {
        let (sheet, f) = sheet_with_delta_ratio(1e-3, 1.0);
        assert!(psi(&sheet, f, Side::Plus, 0.6e-3).is_err());
    }

    #[test]
    fn psi_overflow_safe_at_extreme_ratio() {
        // |a| d = 1e4 => delta/d = sqrt(2)/1e4; plain sinh would overflow.
        let d = 1e-3;
        let delta = 2.0_f64.sqrt() / 1.0e4 * d;
        let (sheet, f) = {
            let sheet = SheetSpec::new(d, 1000.0 * MU0, 1.0e6).unwrap();
            let f = frequency_for_skin_depth(sheet.mu, sheet.sigma, delta).unwrap();
            (sheet, f)
        };
        let a = wavenumber(sheet.mu, sheet.sigma, f).unwrap();
        assert!((a.norm() * d - 1.0e4).abs() / 1.0e4 < 1e-12);
        for frac in [-0.5, -0.25, 0.0, 0.25, 0.5] {
            let v = psi(&sheet, f, Side::Plus, frac * d).unwrap();
            assert!(v.re.is_finite() && v.im.is_finite());
            assert!(v.norm() <= 1.0 + 1e-12);
        }
        assert_abs_diff_eq!(psi(&sheet, f, Side::Plus, 0.5 * d).unwrap().re, 1.0, epsilon = 1e-13);
        // Deep inside, the boundary layer has fully decayed.
        assert!(psi(&sheet, f, Side::Plus, 0.0).unwrap().norm() < 1e-100);
    }

    #[test]
    fn build_basis_thin_limit_hats() {
        let d = 1e-3;
        let (sheet, f1) = sheet_with_delta_ratio(d, 2000.0);
        let basis = build_basis(&sheet, f1, 1, &RankRule::Odd).unwrap();
        for i in 0..=20 {
            let y = -0.5 * d + d * i as f64 / 20.0;
            let hat_plus = (0.5 * d + y) / d;
            let hat_minus = (0.5 * d - y) / d;
            assert!((basis.eval(basis.index_cos(Side::Plus, 1), y).unwrap() - hat_plus).abs() < 1e-6);
            assert!((basis.eval(basis.index_cos(Side::Minus, 1), y).unwrap() - hat_minus).abs() < 1e-6);
            assert!(basis.eval(basis.index_sin(Side::Plus, 1), y).unwrap().abs() < 1e-6);
            assert!(basis.eval(basis.index_sin(Side::Minus, 1), y).unwrap().abs() < 1e-6);
        }
    }

    #[test]
    fn geometric_rank_rule_reproduces_depth_halving() {
        let d = 1e-3;
        let (sheet, f1) = sheet_with_delta_ratio(d, 1.0);
        let basis = build_basis(&sheet, f1, 3, &RankRule::Geometric).unwrap();
        let f = basis.frequencies();
        assert_abs_diff_eq!(f[1] / f[0], 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(f[2] / f[0], 16.0, epsilon = 1e-12);
        let deltas = basis.skin_depths();
        assert_abs_diff_eq!(deltas[0], d, epsilon = 1e-15);
        assert_abs_diff_eq!(deltas[1], d / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(deltas[2], d / 4.0, epsilon = 1e-15);
    }

    #[test]
    fn odd_rank_rule() {
        let (sheet, f1) = sheet_with_delta_ratio(1e-3, 1.0);
        let basis = build_basis(&sheet, f1, 2, &RankRule::Odd).unwrap();
        assert_abs_diff_eq!(basis.frequencies()[1], 3.0 * f1, epsilon = 1e-9);
    }

    #[test]
    fn duplicate_frequencies_rejected() {
        let (sheet, f1) = sheet_with_delta_ratio(1e-3, 1.0);
        let err = build_basis(&sheet, f1, 2, &RankRule::Explicit(vec![f1, f1]));
        assert!(err.is_err());
    }

    #[test]
    fn boundary_trace_property() {
        // Exactly two functions are nonzero at the faces, each 1 on its side.
        let d = 1e-3;
        let (sheet, f1) = sheet_with_delta_ratio(d, 1.0);
        for n in [1, 2, 3] {
            let basis = build_basis(&sheet, f1, n, &RankRule::Odd).unwrap();
            let (tp, tm) = basis.trace_indices();
            for p in 0..basis.len() {
                let at_plus = basis.eval(p, 0.5 * d).unwrap();
                let at_minus = basis.eval(p, -0.5 * d).unwrap();
                if p == tp {
                    assert_abs_diff_eq!(at_plus, 1.0, epsilon = 1e-12);
                    assert_abs_diff_eq!(at_minus, 0.0, epsilon = 1e-12);
                } else if p == tm {
                    assert_abs_diff_eq!(at_plus, 0.0, epsilon = 1e-12);
                    assert_abs_diff_eq!(at_minus, 1.0, epsilon = 1e-12);
                } else {
                    assert_abs_diff_eq!(at_plus, 0.0, epsilon = 1e-12);
                    assert_abs_diff_eq!(at_minus, 0.0, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn derivative_matches_central_difference() {
        let d = 1e-3;
        let (sheet, f1) = sheet_with_delta_ratio(d, 0.5);
        let basis = build_basis(&sheet, f1, 3, &RankRule::Odd).unwrap();
        let h = 1e-7 * d;
        for p in 0..basis.len() {
            for i in 1..=20 {
                let y = -0.5 * d + d * i as f64 / 21.0;
                let fd = (basis.eval(p, y + h).unwrap() - basis.eval(p, y - h).unwrap()) / (2.0 * h);
                let an = basis.eval_deriv(p, y).unwrap();
                let scale = an.abs().max(1.0 / d);
                assert!(
                    (fd - an).abs() <= 1e-6 * scale,
                    "p={p} y={y}: fd={fd}, analytic={an}"
                );
            }
        }
    }

    #[test]
    fn index_out_of_range_rejected() {
        let (sheet, f1) = sheet_with_delta_ratio(1e-3, 1.0);
        let basis = build_basis(&sheet, f1, 2, &RankRule::Odd).unwrap();
        assert!(basis.eval(8, 0.0).is_err());
        assert!(basis.eval_deriv(8, 0.0).is_err());
    }

    #[test]
    fn classical_ibc_thin_limit() {
        let d = 1e-3;
        let (sheet, f) = sheet_with_delta_ratio(d, 1000.0);
        let omega = 2.0 * std::f64::consts::PI * f;
        let ibc = classical_ibc(&sheet, f).unwrap();
        let eta_e_limit = Complex64::new(sheet.sigma * d / 2.0, 0.0);
        let eta_h_limit = Complex64::new(0.0, -omega * sheet.mu * d / 2.0);
        assert!((ibc.eta_e - eta_e_limit).norm() / eta_e_limit.norm() < 1e-4);
        assert!((ibc.eta_h - eta_h_limit).norm() / eta_h_limit.norm() < 1e-4);
    }

    #[test]
    fn classical_ibc_thin_limit_invariant_at_ratio_100() {
        let (sheet, f) = sheet_with_delta_ratio(1e-3, 100.0);
        let omega = 2.0 * std::f64::consts::PI * f;
        let d = sheet.thickness;
        let ibc = classical_ibc(&sheet, f).unwrap();
        assert!((ibc.eta_e - Complex64::new(sheet.sigma * d / 2.0, 0.0)).norm() < 1e-3 * ibc.eta_e.norm());
        assert!((ibc.eta_h - Complex64::new(0.0, -omega * sheet.mu * d / 2.0)).norm() < 1e-3 * ibc.eta_h.norm());
    }

    #[test]
    fn classical_ibc_matches_plain_route_at_moderate_argument() {
        let (sheet, f) = sheet_with_delta_ratio(1e-3, 1.0);
        let a = wavenumber(sheet.mu, sheet.sigma, f).unwrap();
        let omega = 2.0 * std::f64::consts::PI * f;
        // Plain tanh route (safe at |a d| ~ sqrt(2)).
        let z = a * sheet.thickness * 0.5;
        let t = z.sinh() / z.cosh();
        let eta_h_oracle = -Complex64::new(0.0, omega * sheet.mu) / a * t;
        let eta_e_oracle = Complex64::new(sheet.sigma, 0.0) / a * t;
        let ibc = classical_ibc(&sheet, f).unwrap();
        assert!((ibc.eta_h - eta_h_oracle).norm() <= 1e-12 * eta_h_oracle.norm());
        assert!((ibc.eta_e - eta_e_oracle).norm() <= 1e-12 * eta_e_oracle.norm());
    }

    #[test]
    fn thin_limit_error_decreases_monotonically() {
        let d = 1e-3;
        let mut last = f64::INFINITY;
        for ratio in [10.0, 100.0, 1000.0] {
            let (sheet, f1) = sheet_with_delta_ratio(d, ratio);
            let basis = build_basis(&sheet, f1, 1, &RankRule::Odd).unwrap();
            let mut sup = 0.0f64;
            for i in 0..=200 {
                let y = -0.5 * d + d * i as f64 / 200.0;
                let hat = (0.5 * d + y) / d;
                let v = basis.eval(0, y).unwrap();
                sup = sup.max((v - hat).abs());
            }
            assert!(sup < last, "sup error must decrease: ratio {ratio}: {sup} vs {last}");
            last = sup;
        }
        assert!(last < 1e-6);
    }

    proptest! {
        /// psi = theta_c + j theta_s pointwise (n = 1 construction).
        #[test]
        fn decomposition_identity(frac in -0.5f64..0.5, ratio in 0.05f64..50.0) {
            let d = 1e-3;
            let (sheet, f) = sheet_with_delta_ratio(d, ratio);
            let basis = build_basis(&sheet, f, 1, &RankRule::Odd).unwrap();
            let y = frac * d;
            let p = psi(&sheet, f, Side::Plus, y).unwrap();
            let c = basis.eval(basis.index_cos(Side::Plus, 1), y).unwrap();
            let s = basis.eval(basis.index_sin(Side::Plus, 1), y).unwrap();
            prop_assert!((p - Complex64::new(c, s)).norm() < 1e-13);
        }

        /// theta^-(y) = theta^+(-y) for every pair.
        #[test]
        fn mirror_symmetry(frac in -0.5f64..0.5, ratio in 0.05f64..50.0, n in 1usize..4) {
            let d = 1e-3;
            let (sheet, f1) = sheet_with_delta_ratio(d, ratio);
            let basis = build_basis(&sheet, f1, n, &RankRule::Odd).unwrap();
            let y = frac * d;
            for rank in 1..=n {
                let cp = basis.eval(basis.index_cos(Side::Plus, rank), -y).unwrap();
                let cm = basis.eval(basis.index_cos(Side::Minus, rank), y).unwrap();
                prop_assert!((cp - cm).abs() < 1e-13);
                let sp = basis.eval(basis.index_sin(Side::Plus, rank), -y).unwrap();
                let sm = basis.eval(basis.index_sin(Side::Minus, rank), y).unwrap();
                prop_assert!((sp - sm).abs() < 1e-13);
            }
        }
    }
}
