//! # lapchi
//!
//! Normalized-Laplacian spectra of graphs and what they say about colourings.
//!
//! The normalized Laplacian of a graph without isolated vertices is
//!
//! ```text
//! L = I - D^{-1/2} A D^{-1/2}
//! ```
//!
//! and for any partition `π` of the vertices with characteristic matrix `S`
//! the lift `P = D^{1/2} S N^{-1/2}` (with `N` the diagonal of class volumes)
//! has orthonormal columns and compresses `L` to the Laplacian of the
//! quotient graph. Eigenvalue interlacing then turns the spectrum of `L`
//! into lower bounds on the chromatic number and into certificates about the
//! colourings that meet those bounds.
//!
//! ## Modules
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`graph`] | weighted graphs, vertex sets, partitions, `Vol` and `e(S,T)` |
//! | [`eigen`] | dense matrices, cyclic Jacobi eigensolver, interlacing checks |
//! | [`laplacian`] | `L(G)`, quotient graphs, `L(G/π)`, the lift `P`, `σ_k` |
//! | [`bounds`] | chromatic lower bounds and comparators |
//! | [`colouring`] | exact/greedy colouring, equitability, regularity |
//! | [`expansion`] | `γ`, `γ*`, `ψ_k`, `φ_k` and their spectral inequalities |
//! | [`hypergraph`] | uniform linear hypergraphs and their underlying graphs |
//! | [`corpus`] | named graph families and exhaustive graph enumeration |
//!
//! ## Conventions
//!
//! `e(S,S)` counts ordered pairs, so it equals twice the internal edge
//! weight. With that reading `SᵀAS` is exactly the quotient adjacency and
//! `tr L(G/π) = k - Σ e(S_j,S_j)/Vol(S_j)` holds as a matrix identity.
//!
//! Spectra are stored ascending: `λ_0 ≤ λ_1 ≤ … ≤ λ_{n-1}`.

pub mod bounds;
pub mod colouring;
pub mod corpus;
pub mod eigen;
pub mod expansion;
pub mod graph;
pub mod hypergraph;
pub mod laplacian;

mod error;
mod verdict;

pub use error::{Error, Result};
pub use verdict::Verdict;

/// Tolerance used when comparing eigenvalues in theorem checks.
pub const THEOREM_TOL: f64 = 1e-9;

/// Default convergence tolerance for the eigensolver.
pub const EIGEN_TOL: f64 = 1e-10;
