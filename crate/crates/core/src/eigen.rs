//! Dense matrices, the cyclic Jacobi eigensolver, and interlacing checks.
//!
//! Nothing in this module knows about graphs.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::Serialize;

use crate::{Error, Result};

/// Maximum number of full Jacobi sweeps.
pub const MAX_SWEEPS: usize = 100;

/// Symmetry tolerance accepted by [`SymmetricMatrix::new`].
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Row-major dense real matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a == 0.0 {
                    continue;
                }
                let src = &other.data[l * other.cols..(l + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Entrywise max of `|self - other|`.
    pub fn max_abs_diff(&self, other: &Matrix) -> Result<f64> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
    }

    /// Induced infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        self.data
            .chunks(self.cols.max(1))
            .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

/// Square matrix whose symmetry was checked at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix(Matrix);

impl SymmetricMatrix {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows != matrix.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} is not square",
                matrix.rows, matrix.cols
            )));
        }
        if matrix.rows == 0 {
            return Err(Error::EmptyMatrix);
        }
        let n = matrix.rows;
        for i in 0..n {
            for j in (i + 1)..n {
                let gap = (matrix[(i, j)] - matrix[(j, i)]).abs();
                if gap > SYMMETRY_TOL || gap.is_nan() {
                    return Err(Error::NotSymmetric { i, j, gap });
                }
            }
        }
        Ok(Self(matrix))
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {n} rows",
                bad.len()
            )));
        }
        Self::new(Matrix::from_vec(n, n, rows.concat())?)
    }

    /// Wraps a matrix that is symmetric by construction.
    pub(crate) fn trusted(matrix: Matrix) -> Self {
        debug_assert_eq!(matrix.rows, matrix.cols);
        Self(matrix)
    }

    pub fn order(&self) -> usize {
        self.0.rows
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn trace(&self) -> f64 {
        (0..self.order()).map(|i| self.0[(i, i)]).sum()
    }

    /// Conjugates by a permutation: entry `(i, j)` becomes `m[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} for order {n}",
                perm.len()
            )));
        }
        Ok(Self(Matrix::from_fn(n, n, |i, j| {
            self.0[(perm[i], perm[j])]
        })))
    }
}

impl Index<(usize, usize)> for SymmetricMatrix {
    type Output = f64;

    #[inline]
    fn index(&self, idx: (usize, usize)) -> &f64 {
        &self.0[idx]
    }
}

/// Ascending eigenvalues, optionally with orthonormal eigenvectors as columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: Option<Matrix>,
}

impl Spectrum {
    /// Spectrum from a list of values, sorted on the way in.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Self {
            eigenvalues: values,
            eigenvectors: None,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> Option<&Matrix> {
        self.eigenvectors.as_ref()
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    /// Sum of all eigenvalues.
    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Converges when the off-diagonal Frobenius norm drops to
/// `tol * max(1, ‖m‖_∞)`.
pub fn eigendecompose(m: &SymmetricMatrix, tol: f64) -> Result<Spectrum> {
    jacobi(m, tol, true)
}

/// Eigenvalues only; skips accumulating the rotations.
pub fn eigenvalues(m: &SymmetricMatrix, tol: f64) -> Result<Spectrum> {
    jacobi(m, tol, false)
}

fn jacobi(m: &SymmetricMatrix, tol: f64, want_vectors: bool) -> Result<Spectrum> {
    let n = m.order();
    let mut a = m.0.data.clone();
    let mut v = want_vectors.then(|| Matrix::identity(n).data);
    let threshold = tol * m.0.norm_inf().max(1.0);

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
                if let Some(v) = v.as_mut() {
                    for r in 0..n {
                        let vrp = v[r * n + p];
                        let vrq = v[r * n + q];
                        v[r * n + p] = vrp - s * (vrq + tau * vrp);
                        v[r * n + q] = vrq + s * (vrp - tau * vrq);
                    }
                }
            }
        }
    }
    if !converged {
        let residual = off_norm(&a);
        if residual > threshold {
            return Err(Error::NoConvergence {
                sweeps: MAX_SWEEPS,
                residual,
            });
        }
    }

    let diag: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| diag[x].total_cmp(&diag[y]));
    let eigenvalues = order.iter().map(|&i| diag[i]).collect();
    let eigenvectors = v.map(|v| Matrix::from_fn(n, n, |r, j| v[r * n + order[j]]));
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// One failed inequality `lower ≤ μ_i ≤ upper`, indexed descending from 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterlacingViolation {
    pub i: usize,
    pub lower: f64,
    pub mu: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterlacingReport {
    pub holds: bool,
    pub tight: bool,
    /// Number of leading (largest) eigenvalues that meet their upper bound
    /// in a tight split; the rest meet their lower bound.
    pub tight_split_k: Option<usize>,
    pub violations: Vec<InterlacingViolation>,
}

/// Checks that `small` interlaces `big`.
///
/// With both spectra sorted descending, `θ_{n-m+i} ≤ μ_i ≤ θ_i` for
/// `i = 1..m`. In ascending storage this reads
/// `big[j] ≤ small[j] ≤ big[n-m+j]`.
pub fn verify_interlacing(big: &Spectrum, small: &Spectrum, tol: f64) -> Result<InterlacingReport> {
    let n = big.len();
    let m = small.len();
    if m > n {
        return Err(Error::SizeMismatch { big: n, small: m });
    }
    let theta = big.values();
    let mu = small.values();

    let mut violations = Vec::new();
    // top[i-1] / bottom[i-1] for descending index i
    let mut top = vec![false; m];
    let mut bottom = vec![false; m];
    for j in 0..m {
        let i = m - j;
        let lower = theta[j];
        let upper = theta[n - m + j];
        if mu[j] < lower - tol || mu[j] > upper + tol {
            violations.push(InterlacingViolation {
                i,
                lower,
                mu: mu[j],
                upper,
            });
        }
        top[i - 1] = (mu[j] - upper).abs() <= tol;
        bottom[i - 1] = (mu[j] - lower).abs() <= tol;
    }
    violations.sort_by_key(|v| v.i);
    let holds = violations.is_empty();

    let tight_split_k = if holds {
        // largest k with top[0..k] all true and bottom[k..m] all true
        let prefix = top.iter().take_while(|&&t| t).count();
        let suffix_start = m - bottom.iter().rev().take_while(|&&b| b).count();
        (suffix_start <= prefix).then_some(prefix)
    } else {
        None
    };
    Ok(InterlacingReport {
        holds,
        tight: tight_split_k.is_some(),
        tight_split_k,
        violations,
    })
}
