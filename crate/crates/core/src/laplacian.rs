//! Normalized Laplacians of graphs and quotient graphs, and the lift `P`.
//!
//! For a partition `π` with characteristic matrix `S` and class volumes `N`,
//! `P = D^{1/2} S N^{-1/2}` satisfies `PᵀP = I` and
//! `Pᵀ L(G) P = L(G/π)`.

use serde::Serialize;

use crate::eigen::{self, Matrix, Spectrum, SymmetricMatrix};
use crate::graph::{Graph, Partition};
use crate::{Error, Result};

/// Weighted graph on the classes of a partition.
///
/// Off-diagonal `(i, j)` holds `e(S_i, S_j)`; the diagonal holds the ordered
/// internal count `e(S_j, S_j)`, so each row sums to `Vol(S_j)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientGraph {
    k: usize,
    weights: Vec<f64>,
    class_volumes: Vec<f64>,
}

impl QuotientGraph {
    pub fn class_count(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[i * self.k + j]
    }

    pub fn class_volume(&self, j: usize) -> f64 {
        self.class_volumes[j]
    }

    pub fn class_volumes(&self) -> &[f64] {
        &self.class_volumes
    }

    pub fn weights(&self) -> Matrix {
        Matrix::from_fn(self.k, self.k, |i, j| self.weight(i, j))
    }

    /// Off-diagonal weights `e(S_i, S_j)` for `i < j`.
    pub fn pair_weights(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.k).flat_map(move |i| ((i + 1)..self.k).map(move |j| (i, j, self.weight(i, j))))
    }
}

/// `L = I - D^{-1/2} A D^{-1/2}`, with an exact unit diagonal.
pub fn normalized_laplacian(g: &Graph) -> SymmetricMatrix {
    let n = g.order();
    let inv_sqrt: Vec<f64> = g.degrees().iter().map(|d| 1.0 / d.sqrt()).collect();
    let m = Matrix::from_fn(n, n, |a, b| {
        if a == b {
            1.0
        } else {
            -g.weight(a, b) * inv_sqrt[a] * inv_sqrt[b]
        }
    });
    SymmetricMatrix::trusted(m)
}

/// Eigenvalues of `L(G)` at tolerance `tol`.
pub fn laplacian_spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    eigen::eigenvalues(&normalized_laplacian(g), tol)
}

/// `σ_k`, the sum of the `k` largest eigenvalues.
pub fn sigma(s: &Spectrum, k: usize) -> Result<f64> {
    let n = s.len();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    Ok(s.values()[n - k..].iter().rev().sum())
}

/// `SᵀAS` together with the class volumes.
pub fn quotient_graph(g: &Graph, p: &Partition) -> Result<QuotientGraph> {
    g.check_partition(p)?;
    let k = p.class_count();
    let mut weights = vec![0.0; k * k];
    let mut class_volumes = vec![0.0; k];
    for a in 0..g.order() {
        let ca = p.class_of(a);
        class_volumes[ca] += g.degree(a);
        for (b, w) in g.neighbours(a) {
            weights[ca * k + p.class_of(b)] += w;
        }
    }
    if let Some(empty) = class_volumes.iter().position(|&v| v <= 0.0) {
        return Err(Error::EmptyClass(empty));
    }
    Ok(QuotientGraph {
        k,
        weights,
        class_volumes,
    })
}

/// `L(G/π) = I - N^{-1/2} A(G/π) N^{-1/2}`.
pub fn quotient_laplacian(q: &QuotientGraph) -> SymmetricMatrix {
    let inv_sqrt: Vec<f64> = q.class_volumes.iter().map(|v| 1.0 / v.sqrt()).collect();
    let m = Matrix::from_fn(q.k, q.k, |i, j| {
        let entry = q.weight(i, j) * inv_sqrt[i] * inv_sqrt[j];
        if i == j {
            1.0 - entry
        } else {
            -entry
        }
    });
    SymmetricMatrix::trusted(m)
}

/// `k - Σ_j e(S_j,S_j)/Vol(S_j)`, the trace of `L(G/π)` in closed form.
pub fn quotient_trace(q: &QuotientGraph) -> f64 {
    q.k as f64
        - (0..q.k)
            .map(|j| q.weight(j, j) / q.class_volume(j))
            .sum::<f64>()
}

/// `P = D^{1/2} S N^{-1/2}` as an `n × k` matrix.
pub fn lift_matrix(g: &Graph, p: &Partition) -> Result<Matrix> {
    g.check_partition(p)?;
    let k = p.class_count();
    let mut volumes = vec![0.0; k];
    for a in 0..g.order() {
        volumes[p.class_of(a)] += g.degree(a);
    }
    if let Some(empty) = volumes.iter().position(|&v| v <= 0.0) {
        return Err(Error::EmptyClass(empty));
    }
    Ok(Matrix::from_fn(g.order(), k, |a, j| {
        if p.class_of(a) == j {
            (g.degree(a) / volumes[j]).sqrt()
        } else {
            0.0
        }
    }))
}

/// `‖L(G)·P − P·L(G/π)‖` in the entrywise max norm.
///
/// Vanishes exactly when `π` is equitable with respect to `D^{-1}A`.
pub fn commutation_residual(g: &Graph, p: &Partition) -> Result<f64> {
    let lift = lift_matrix(g, p)?;
    let l = normalized_laplacian(g);
    let lq = quotient_laplacian(&quotient_graph(g, p)?);
    let left = l.matrix().matmul(&lift)?;
    let right = lift.matmul(lq.matrix())?;
    left.max_abs_diff(&right)
}
