//! Coordinate-format sparse systems with a deterministic direct solver.
//!
//! Real and complex systems share the same container and assembly path; the
//! factorization is a sparse LU (via `faer`) run sequentially so that repeated
//! runs are bit-identical.

use std::sync::Once;

use faer::prelude::*;
use faer::sparse::{SparseColMat, Triplet};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Scalar types accepted by [`SparseSystem`].
pub trait SolveScalar:
    faer::traits::ComplexField<Unit = Self, Real = f64> + Copy + std::ops::AddAssign
{
    fn is_finite_scalar(&self) -> bool;
}

impl SolveScalar for f64 {
    fn is_finite_scalar(&self) -> bool {
        self.is_finite()
    }
}

impl SolveScalar for Complex64 {
    fn is_finite_scalar(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

static FAER_SETUP: Once = Once::new();

fn ensure_sequential() {
    // Parallel reductions may reorder floating-point sums; regression tests
    // rely on byte-identical reruns.
    FAER_SETUP.call_once(|| faer::set_global_parallelism(faer::Par::Seq));
}

/// A square linear system assembled from coordinate triplets plus a dense
/// right-hand side. Duplicate (row, col) entries sum on finalization.
#[derive(Debug, Clone)]
pub struct SparseSystem<T> {
    dim: usize,
    triplets: Vec<(usize, usize, T)>,
    rhs: Vec<T>,
}

impl<T: SolveScalar> SparseSystem<T> {
    pub fn new(dim: usize) -> Self {
        SparseSystem {
            dim,
            triplets: Vec::new(),
            rhs: vec![T::zero_impl(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Accumulate `value` at (row, col).
    pub fn add(&mut self, row: usize, col: usize, value: T) {
        assert!(row < self.dim && col < self.dim, "index out of range");
        self.triplets.push((row, col, value));
    }

    pub fn add_rhs(&mut self, row: usize, value: T) {
        self.rhs[row] += value;
    }

    pub fn rhs(&self) -> &[T] {
        &self.rhs
    }

    pub fn rhs_mut(&mut self) -> &mut [T] {
        &mut self.rhs
    }

    pub fn set_rhs(&mut self, rhs: Vec<T>) {
        assert_eq!(rhs.len(), self.dim);
        self.rhs = rhs;
    }

    /// Clear a row and put 1 on the diagonal; used for strongly imposed
    /// (Dirichlet-type) equations together with [`Self::add_rhs`].
    pub fn set_identity_row(&mut self, row: usize) {
        self.triplets.retain(|&(r, _, _)| r != row);
        self.triplets.push((row, row, T::one_impl()));
    }

    /// Merge duplicates into sorted CSC-order triplets.
    fn merged(&self) -> Result<Vec<(usize, usize, T)>> {
        let mut t = self.triplets.clone();
        t.sort_by(|a, b| (a.1, a.0).cmp(&(b.1, b.0)));
        let mut merged: Vec<(usize, usize, T)> = Vec::with_capacity(t.len());
        for (r, c, v) in t {
            match merged.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => merged.push((r, c, v)),
            }
        }
        // Structural singularity: an empty row or column cannot be pivoted.
        let mut row_seen = vec![false; self.dim];
        let mut col_seen = vec![false; self.dim];
        for &(r, c, _) in &merged {
            row_seen[r] = true;
            col_seen[c] = true;
        }
        for i in 0..self.dim {
            if !row_seen[i] || !col_seen[i] {
                return Err(Error::FactorizationFailure { pivot: Some(i) });
            }
        }
        Ok(merged)
    }

    /// Factor the current matrix for repeated solves against new right-hand
    /// sides (constant-matrix time stepping).
    pub fn factor(&self) -> Result<SparseFactor<T>> {
        ensure_sequential();
        let merged = self.merged()?;
        let triplets: Vec<Triplet<usize, usize, T>> = merged
            .into_iter()
            .map(|(r, c, v)| Triplet::new(r, c, v))
            .collect();
        let mat = SparseColMat::try_new_from_triplets(self.dim, self.dim, &triplets)
            .map_err(|_| Error::FactorizationFailure { pivot: None })?;
        let lu = mat
            .sp_lu()
            .map_err(|_| Error::FactorizationFailure { pivot: None })?;
        Ok(SparseFactor { dim: self.dim, lu })
    }

    /// Factor and solve against the stored right-hand side.
    pub fn solve(&self) -> Result<Vec<T>> {
        let factor = self.factor()?;
        factor.solve(&self.rhs)
    }
}

/// A sparse LU factorization that can be reused for many right-hand sides.
pub struct SparseFactor<T: SolveScalar> {
    dim: usize,
    lu: faer::sparse::linalg::solvers::Lu<usize, T>,
}

impl<T: SolveScalar> SparseFactor<T> {
    pub fn solve(&self, rhs: &[T]) -> Result<Vec<T>> {
        assert_eq!(rhs.len(), self.dim);
        let b = faer::Mat::from_fn(self.dim, 1, |i, _| rhs[i]);
        let x = self.lu.solve(&b);
        let out: Vec<T> = (0..self.dim).map(|i| x[(i, 0)]).collect();
        if out.iter().any(|v| !v.is_finite_scalar()) {
            return Err(Error::FactorizationFailure { pivot: None });
        }
        Ok(out)
    }
}
