//! Gauss–Legendre quadrature rules on [-1, 1].

use crate::error::{Error, Result};

/// Nodes and weights of a Gauss–Legendre rule on the reference interval [-1, 1].
///
/// A rule of order `m` has `m` points and integrates polynomials up to degree
/// `2m - 1` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    /// Abscissae, strictly increasing, symmetric about 0.
    pub points: Vec<f64>,
    /// Positive weights; they sum to 2 (the length of the reference interval).
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.points.len()
    }

    /// Integrate `f` over [a, b] with a single application of the rule.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        for (&x, &w) in self.points.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        half * sum
    }

    /// Integrate `f` over [a, b] split into `nsub` equal subintervals.
    pub fn integrate_composite<F: FnMut(f64) -> f64>(
        &self,
        a: f64,
        b: f64,
        nsub: usize,
        mut f: F,
    ) -> f64 {
        let h = (b - a) / nsub as f64;
        let mut sum = 0.0;
        for i in 0..nsub {
            sum += self.integrate(a + i as f64 * h, a + (i + 1) as f64 * h, &mut f);
        }
        sum
    }
}

/// Legendre polynomial P_m and its derivative at `x`, by three-term recurrence.
fn legendre_and_derivative(m: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0; // P_0
    let mut p = x; // P_1
    for k in 1..m {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = p_next;
    }
    // P'_m(x) = m (x P_m - P_{m-1}) / (x^2 - 1); x is always interior here.
    let dp = m as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Build the Gauss–Legendre rule of the given order.
///
/// Nodes are found by Newton iteration on P_m starting from the Chebyshev-like
/// estimate cos(pi (i - 1/4)/(m + 1/2)), converged to 1e-15, and mirrored so
/// the rule is exactly symmetric.
pub fn gauss_legendre(order: usize) -> Result<QuadratureRule> {
    if order < 1 {
        return Err(Error::invalid("quadrature order must be >= 1"));
    }
    let m = order;
    let mut points = vec![0.0; m];
    let mut weights = vec![0.0; m];
    // Only the lower half (negative x); the rest by symmetry.
    for i in 0..(m + 1) / 2 {
        let mut x = -(std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        // Newton converges in a handful of steps from this estimate.
        for _ in 0..100 {
            let (p, dp) = legendre_and_derivative(m, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_derivative(m, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        points[i] = x;
        weights[i] = w;
        points[m - 1 - i] = -x;
        weights[m - 1 - i] = w;
    }
    if m % 2 == 1 {
        points[m / 2] = 0.0;
    }
    Ok(QuadratureRule { points, weights })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn order_one_is_midpoint_rule() {
        let rule = gauss_legendre(1).unwrap();
        assert_eq!(rule.points, vec![0.0]);
        assert_eq!(rule.weights, vec![2.0]);
    }

    #[test]
    fn order_two_matches_closed_form() {
        let rule = gauss_legendre(2).unwrap();
        let x = 1.0 / 3.0_f64.sqrt();
        assert_abs_diff_eq!(rule.points[0], -x, epsilon = 1e-15);
        assert_abs_diff_eq!(rule.points[1], x, epsilon = 1e-15);
        assert_abs_diff_eq!(rule.weights[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rule.weights[1], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn rejects_zero_order() {
        assert!(gauss_legendre(0).is_err());
    }

    /// Adaptive composite Simpson, used as an independent oracle.
    fn simpson_adaptive<F: Fn(f64) -> f64 + Copy>(f: F, a: f64, b: f64, tol: f64) -> f64 {
        fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
            let m = 0.5 * (a + b);
            (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
        }
        fn recurse<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
            let m = 0.5 * (a + b);
            let left = simpson(f, a, m);
            let right = simpson(f, m, b);
            if depth > 40 || (left + right - whole).abs() <= 15.0 * tol {
                left + right + (left + right - whole) / 15.0
            } else {
                recurse(f, a, m, left, 0.5 * tol, depth + 1)
                    + recurse(f, m, b, right, 0.5 * tol, depth + 1)
            }
        }
        recurse(&f, a, b, simpson(&f, a, b), tol, 0)
    }

    #[test]
    fn order_twenty_integrates_cosine() {
        let rule = gauss_legendre(20).unwrap();
        let got = rule.integrate(-1.0, 1.0, f64::cos);
        // Frozen from the Simpson oracle; equals 2 sin(1).
        let oracle = simpson_adaptive(f64::cos, -1.0, 1.0, 1e-15);
        assert_abs_diff_eq!(oracle, 2.0 * 1.0_f64.sin(), epsilon = 1e-12);
        assert_abs_diff_eq!(got, oracle, epsilon = 1e-14);
    }

    #[test]
    fn rule_invariants_orders_1_to_24() {
        for m in 1..=24 {
            let rule = gauss_legendre(m).unwrap();
            let wsum: f64 = rule.weights.iter().sum();
            assert_abs_diff_eq!(wsum, 2.0, epsilon = 1e-13);
            for w in &rule.weights {
                assert!(*w > 0.0);
            }
            for i in 1..m {
                assert!(rule.points[i] > rule.points[i - 1]);
            }
            for i in 0..m {
                assert_abs_diff_eq!(rule.points[i], -rule.points[m - 1 - i], epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn exactness_up_to_degree_2m_minus_1() {
        for m in 1..=24 {
            let rule = gauss_legendre(m).unwrap();
            for k in 0..=(2 * m - 1) {
                let got = rule.integrate(-1.0, 1.0, |y| y.powi(k as i32));
                let exact = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
                assert!(
                    (got - exact).abs() <= 1e-12 * exact.abs().max(1.0),
                    "order {m}, monomial degree {k}: got {got}, want {exact}"
                );
            }
        }
    }
}
