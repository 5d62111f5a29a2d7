//! Small dense matrices for the spectral slab systems (dimension 4n).
//!
//! Factorization uses full pivoting: the sine-function rows of the slab
//! matrices become vanishingly small when the skin depth far exceeds the
//! sheet thickness, and partial pivoting can lose the remaining digits.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Element trait for [`DenseMat`]; implemented for f64 and Complex64.
pub trait DenseScalar:
    Copy
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
    + std::ops::AddAssign
    + std::ops::SubAssign
    + PartialEq
{
    fn zero() -> Self;
    fn one() -> Self;
    fn modulus(&self) -> f64;
}

impl DenseScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn modulus(&self) -> f64 {
        self.abs()
    }
}

impl DenseScalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
}

/// Row-major square dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMat<T = f64> {
    n: usize,
    data: Vec<T>,
}

impl<T: DenseScalar> DenseMat<T> {
    pub fn zeros(n: usize) -> Self {
        DenseMat {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] += v;
    }

    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut s = T::zero();
                for j in 0..self.n {
                    s += self.get(i, j) * x[j];
                }
                s
            })
            .collect()
    }

    /// Map both index sets through `idx`, producing the submatrix
    /// A[idx, idx].
    pub fn submatrix(&self, idx: &[usize]) -> DenseMat<T> {
        let m = idx.len();
        let mut out = DenseMat::zeros(m);
        for (i, &gi) in idx.iter().enumerate() {
            for (j, &gj) in idx.iter().enumerate() {
                out.set(i, j, self.get(gi, gj));
            }
        }
        out
    }

    /// Solve A x = b by Gaussian elimination with full pivoting.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        assert_eq!(b.len(), self.n);
        let n = self.n;
        let mut a = self.data.clone();
        let mut x = b.to_vec();
        let mut col_perm: Vec<usize> = (0..n).collect();

        for k in 0..n {
            // Full pivot search over the remaining submatrix.
            let (mut pi, mut pj, mut pmax) = (k, k, -1.0f64);
            for i in k..n {
                for j in k..n {
                    let m = a[i * n + j].modulus();
                    if m > pmax {
                        pmax = m;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if !(pmax > 0.0) || !pmax.is_finite() {
                return Err(Error::FactorizationFailure { pivot: Some(k) });
            }
            if pi != k {
                for j in 0..n {
                    a.swap(k * n + j, pi * n + j);
                }
                x.swap(k, pi);
            }
            if pj != k {
                for i in 0..n {
                    a.swap(i * n + k, i * n + pj);
                }
                col_perm.swap(k, pj);
            }
            let pivot = a[k * n + k];
            for i in k + 1..n {
                let f = a[i * n + k] / pivot;
                if f.modulus() == 0.0 {
                    continue;
                }
                for j in k..n {
                    let t = f * a[k * n + j];
                    a[i * n + j] -= t;
                }
                let t = f * x[k];
                x[i] -= t;
            }
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= a[i * n + j] * x[j];
            }
            x[i] = s / a[i * n + i];
        }
        // Undo column permutation.
        let mut out = vec![T::zero(); n];
        for k in 0..n {
            out[col_perm[k]] = x[k];
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn solves_small_real_system() {
        let mut a = DenseMat::zeros(3);
        a.set(0, 0, 4.0);
        a.set(0, 1, 1.0);
        a.set(1, 0, 1.0);
        a.set(1, 1, 3.0);
        a.set(1, 2, 1.0);
        a.set(2, 1, 1.0);
        a.set(2, 2, 2.0);
        let b = vec![6.0, 10.0, 7.0];
        let x = a.solve(&b).unwrap();
        let ax = a.matvec(&x);
        for i in 0..3 {
            assert_abs_diff_eq!(ax[i], b[i], epsilon = 1e-12);
        }
    }

    #[test]
    fn full_pivoting_handles_badly_scaled_rows() {
        // Row scales differ by 1e12; full pivoting keeps all digits.
        let mut a = DenseMat::zeros(2);
        a.set(0, 0, 1e-12);
        a.set(0, 1, 1e-12);
        a.set(1, 0, 1.0);
        a.set(1, 1, 2.0);
        let x = a.solve(&[3e-12, 5.0]).unwrap();
        assert_abs_diff_eq!(x[0], 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(x[1], 2.0, epsilon = 1e-9);
    }

    #[test]
    fn complex_solve() {
        use num_complex::Complex64 as C;
        let mut a = DenseMat::<C>::zeros(2);
        a.set(0, 0, C::new(0.0, 1.0));
        a.set(0, 1, C::new(1.0, 0.0));
        a.set(1, 0, C::new(1.0, 0.0));
        a.set(1, 1, C::new(0.0, -1.0));
        let b = vec![C::new(1.0, 1.0), C::new(1.0, -1.0)];
        let x = a.solve(&b).unwrap();
        let ax = a.matvec(&x);
        for i in 0..2 {
            assert!((ax[i] - b[i]).norm() < 1e-13);
        }
    }

    #[test]
    fn singular_matrix_reports_pivot() {
        let a = DenseMat::<f64>::zeros(2);
        match a.solve(&[1.0, 1.0]) {
            Err(Error::FactorizationFailure { pivot: Some(0) }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }
}
