//! Spectral lower bounds on the chromatic number.
//!
//! Compressing `L(G)` onto a proper `k`-colouring gives a quotient Laplacian
//! with trace exactly `k` and one zero eigenvalue. Interlacing bounds its
//! other `k - 1` eigenvalues by the `k - 1` largest of `L(G)`, hence
//! `σ_{k-1} ≥ k` whenever a proper `k`-colouring exists.
//!
//! The Hoffman and Haemers bounds on the adjacency spectrum are provided as
//! comparators.

use serde::Serialize;

use crate::colouring::exact_chromatic_number;
use crate::eigen::{self, Matrix, Spectrum, SymmetricMatrix};
use crate::graph::{Graph, Partition};
use crate::laplacian::{laplacian_spectrum, quotient_graph, sigma};
use crate::{Error, Result, EIGEN_TOL, THEOREM_TOL};

/// Margin applied to strict comparisons and before taking ceilings.
pub const BOUND_MARGIN: f64 = 1e-9;

fn check_laplacian_spectrum(s: &Spectrum) -> Result<()> {
    if s.is_empty() {
        return Err(Error::NotALaplacianSpectrum("empty spectrum".into()));
    }
    if s.smallest().abs() > THEOREM_TOL {
        return Err(Error::NotALaplacianSpectrum(format!(
            "smallest eigenvalue {} is not 0",
            s.smallest()
        )));
    }
    if let Some(&bad) = s
        .values()
        .iter()
        .find(|&&x| !(-THEOREM_TOL..=2.0 + THEOREM_TOL).contains(&x))
    {
        return Err(Error::NotALaplacianSpectrum(format!(
            "eigenvalue {bad} outside [0, 2]"
        )));
    }
    Ok(())
}

/// `1 + max{k ∈ [1, n-1] : σ_{k-1} < k}`.
///
/// Every `k` is scanned; the comparison uses `σ_{k-1} < k - 1e-9` so that
/// rounding never manufactures a stronger bound.
pub fn sigma_chromatic_bound(s: &Spectrum) -> Result<usize> {
    check_laplacian_spectrum(s)?;
    let n = s.len();
    let mut best = 0;
    for k in 1..n {
        if sigma(s, k - 1)? < k as f64 - BOUND_MARGIN {
            best = k;
        }
    }
    Ok(best + 1)
}

/// `⌈1 + 1/(λ_max - 1)⌉`.
pub fn lambda_chromatic_bound(s: &Spectrum) -> Result<usize> {
    check_laplacian_spectrum(s)?;
    let lambda = s.largest();
    if lambda <= 1.0 + BOUND_MARGIN {
        return Err(Error::DegenerateLambda(lambda));
    }
    Ok(ceil_guarded(1.0 + 1.0 / (lambda - 1.0)))
}

fn ceil_guarded(x: f64) -> usize {
    (x - BOUND_MARGIN).ceil().max(1.0) as usize
}

/// `Σ_j e(S_j,S_j)/Vol(S_j) − (k − σ_{k-1})`, never below zero up to rounding.
pub fn sigma_residual(g: &Graph, p: &Partition, s: &Spectrum) -> Result<f64> {
    let q = quotient_graph(g, p)?;
    let k = p.class_count();
    let inside: f64 = (0..k).map(|j| q.weight(j, j) / q.class_volume(j)).sum();
    Ok(inside - (k as f64 - sigma(s, k - 1)?))
}

/// Eigenvalues of the adjacency matrix.
pub fn adjacency_spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    let n = g.order();
    let a = Matrix::from_vec(n, n, g.adjacency().to_vec())?;
    eigen::eigenvalues(&SymmetricMatrix::new(a)?, tol)
}

/// Hoffman's ratio bound `⌈1 + μ_max/|μ_min|⌉` on adjacency eigenvalues.
pub fn hoffman_bound(g: &Graph) -> Result<usize> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(hoffman_from_spectrum(&adjacency_spectrum(g, EIGEN_TOL)?))
}

fn hoffman_from_spectrum(mu: &Spectrum) -> usize {
    ceil_guarded(1.0 + mu.largest() / mu.smallest().abs())
}

/// Haemers' adjacency interlacing bound.
///
/// A proper `k`-colouring forces `μ_1 + μ_{n-k+2} + … + μ_n ≤ 0` (largest
/// adjacency eigenvalue plus the `k - 1` smallest). The bound is one more
/// than the largest `k` for which that sum is still positive.
pub fn haemers_bound(g: &Graph) -> Result<usize> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(haemers_from_spectrum(&adjacency_spectrum(g, EIGEN_TOL)?))
}

fn haemers_from_spectrum(mu: &Spectrum) -> usize {
    let values = mu.values();
    let n = values.len();
    let mut best = 0;
    let mut running = mu.largest();
    for k in 1..n {
        if k >= 2 {
            running += values[k - 2];
        }
        if running > BOUND_MARGIN {
            best = k;
        }
    }
    best + 1
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerKRow {
    pub k: usize,
    pub sigma_k_minus_1: f64,
    /// `σ_{k-1} < k - 1e-9`, which certifies `χ > k`.
    pub excludes_k: bool,
    /// `|σ_{k-1} - k| ≤ 1e-9`.
    pub near_tie: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub sigma_bound: usize,
    pub lambda_bound: usize,
    pub hoffman_bound: usize,
    pub haemers_bound: usize,
    pub chi_exact: Option<usize>,
    pub lambda_max: f64,
    pub per_k_table: Vec<PerKRow>,
}

impl BoundReport {
    /// True when some bound exceeds the exact chromatic number.
    pub fn has_violation(&self) -> bool {
        self.chi_exact.is_some_and(|chi| {
            [
                self.sigma_bound,
                self.lambda_bound,
                self.hoffman_bound,
                self.haemers_bound,
            ]
            .iter()
            .any(|&b| b > chi)
        })
    }
}

/// Every bound for `g`, plus `χ(G)` when requested and `n ≤ exact_limit`.
pub fn compare_bounds(g: &Graph, with_exact: bool, exact_limit: usize) -> Result<BoundReport> {
    let s = laplacian_spectrum(g, EIGEN_TOL)?;
    let mu = adjacency_spectrum(g, EIGEN_TOL)?;
    let n = g.order();
    let per_k_table = (1..=n)
        .map(|k| {
            let sk = sigma(&s, k - 1)?;
            Ok(PerKRow {
                k,
                sigma_k_minus_1: sk,
                excludes_k: sk < k as f64 - BOUND_MARGIN,
                near_tie: (sk - k as f64).abs() <= BOUND_MARGIN,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let chi_exact = if with_exact && n <= exact_limit {
        Some(exact_chromatic_number(g, exact_limit)?)
    } else {
        None
    };
    Ok(BoundReport {
        sigma_bound: sigma_chromatic_bound(&s)?,
        lambda_bound: lambda_chromatic_bound(&s)?,
        hoffman_bound: hoffman_from_spectrum(&mu),
        haemers_bound: haemers_from_spectrum(&mu),
        chi_exact,
        lambda_max: s.largest(),
        per_k_table,
    })
}
