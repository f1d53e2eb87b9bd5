//! Uniform linear hypergraphs and their underlying graphs.
//!
//! Replacing every hyperedge of an `m`-uniform linear hypergraph by a clique
//! `K_m` gives a graph whose cliques share no edge. Its largest normalized
//! Laplacian eigenvalue is at most `m/(m-1)`, with equality whenever there
//! are more vertices than hyperedges.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{Graph, Partition};
use crate::laplacian::laplacian_spectrum;
use crate::{Error, Result, Verdict, EIGEN_TOL, THEOREM_TOL};

/// `m`-uniform hypergraph whose hyperedges pairwise share at most one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearHypergraph {
    n: usize,
    m: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl LinearHypergraph {
    /// Validates uniformity, linearity and vertex coverage.
    pub fn new(n: usize, m: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        let h = Self { n, m, hyperedges };
        h.validate()?;
        Ok(h)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.n, self.m);
        let mut covered = vec![false; n];
        let mut members: Vec<Vec<bool>> = Vec::with_capacity(self.hyperedges.len());
        for (index, edge) in self.hyperedges.iter().enumerate() {
            if m < 2 {
                return Err(Error::NotUniform {
                    index,
                    m,
                    detail: "uniformity must be at least 2".into(),
                });
            }
            if edge.len() != m {
                return Err(Error::NotUniform {
                    index,
                    m,
                    detail: format!("has {} vertices", edge.len()),
                });
            }
            let mut inside = vec![false; n];
            for &a in edge {
                if a >= n {
                    return Err(Error::VertexOutOfRange { vertex: a, n });
                }
                if inside[a] {
                    return Err(Error::NotUniform {
                        index,
                        m,
                        detail: format!("vertex {a} repeated"),
                    });
                }
                inside[a] = true;
                covered[a] = true;
            }
            for (other, prior) in members.iter().enumerate() {
                let shared = edge.iter().filter(|&&a| prior[a]).count();
                if shared > 1 {
                    return Err(Error::NotLinear(other, index));
                }
            }
            members.push(inside);
        }
        match covered.iter().position(|&c| !c) {
            Some(a) => Err(Error::UncoveredVertex(a)),
            None => Ok(()),
        }
    }

    /// Number of hyperedges containing each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut count = vec![0; self.n];
        for edge in &self.hyperedges {
            for &a in edge {
                count[a] += 1;
            }
        }
        count
    }
}

/// Each hyperedge becomes a unit-weight clique.
pub fn underlying_graph(h: &LinearHypergraph) -> Result<Graph> {
    let mut edges = Vec::new();
    for edge in &h.hyperedges {
        for (i, &u) in edge.iter().enumerate() {
            for &v in &edge[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    Graph::unweighted(h.n, &edges)
}

/// True iff every hyperedge is rainbow under `p`.
pub fn is_strong_colouring(h: &LinearHypergraph, p: &Partition) -> Result<bool> {
    if p.len() != h.n {
        return Err(Error::PartitionSizeMismatch {
            partition: p.len(),
            graph: h.n,
        });
    }
    Ok(h.hyperedges.iter().all(|edge| {
        let mut seen = vec![false; p.class_count()];
        edge.iter()
            .all(|&a| !std::mem::replace(&mut seen[p.class_of(a)], true))
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HypergraphSpectralCheck {
    pub n: usize,
    pub m: usize,
    pub e: usize,
    pub lambda_max: f64,
    pub target: f64,
    pub verdict: Verdict,
}

fn lambda_max(h: &LinearHypergraph) -> Result<f64> {
    Ok(laplacian_spectrum(&underlying_graph(h)?, EIGEN_TOL)?.largest())
}

fn target(h: &LinearHypergraph) -> f64 {
    h.m as f64 / (h.m - 1) as f64
}

/// `λ_max(L(G)) ≤ m/(m-1)` for the underlying graph `G`.
pub fn check_lambda_max_bound(h: &LinearHypergraph) -> Result<HypergraphSpectralCheck> {
    let lambda = lambda_max(h)?;
    let t = target(h);
    Ok(HypergraphSpectralCheck {
        n: h.n,
        m: h.m,
        e: h.edge_count(),
        lambda_max: lambda,
        target: t,
        verdict: Verdict::from_check(lambda <= t + THEOREM_TOL, || {
            format!("largest eigenvalue {lambda} exceeds m/(m-1) = {t}")
        }),
    })
}

/// `λ_max(L(G)) = m/(m-1)` whenever `n > e`.
pub fn check_lambda_max_equality(h: &LinearHypergraph) -> Result<HypergraphSpectralCheck> {
    let lambda = lambda_max(h)?;
    let t = target(h);
    let verdict = if h.n <= h.edge_count() {
        Verdict::HypothesisNotMet {
            reason: format!("n = {} does not exceed e = {}", h.n, h.edge_count()),
        }
    } else {
        Verdict::from_check((lambda - t).abs() <= THEOREM_TOL, || {
            format!("largest eigenvalue {lambda} differs from m/(m-1) = {t}")
        })
    };
    Ok(HypergraphSpectralCheck {
        n: h.n,
        m: h.m,
        e: h.edge_count(),
        lambda_max: lambda,
        target: t,
        verdict,
    })
}

/// `e` hyperedges of size `m` sharing vertex 0 and otherwise disjoint.
pub fn generate_windmill(m: usize, e: usize) -> Result<LinearHypergraph> {
    if m < 2 || e < 1 {
        return Err(Error::NotUniform {
            index: 0,
            m,
            detail: format!("windmill needs m >= 2 and e >= 1 (got m = {m}, e = {e})"),
        });
    }
    let hyperedges = (0..e)
        .map(|i| {
            std::iter::once(0)
                .chain((0..m - 1).map(|j| 1 + i * (m - 1) + j))
                .collect()
        })
        .collect();
    LinearHypergraph::new(e * (m - 1) + 1, m, hyperedges)
}

/// Greedy seeded sampling of `e` pairwise-linear `m`-sets from `0..n`.
///
/// Uncovered vertices are dropped and the rest relabelled densely, so the
/// returned order may be smaller than `n`.
pub fn generate_random_linear(m: usize, e: usize, n: usize, seed: u64) -> Result<LinearHypergraph> {
    if m < 2 || n < m || e == 0 {
        return Err(Error::NotUniform {
            index: 0,
            m,
            detail: format!("cannot sample {e} hyperedges of size {m} from {n} vertices"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = 1000 * e;
    let mut accepted: Vec<Vec<usize>> = Vec::with_capacity(e);
    let mut pair_used = vec![false; n * n];
    let mut attempts = 0;
    while accepted.len() < e {
        if attempts == budget {
            return Err(Error::GenerationFailed {
                attempts,
                accepted: accepted.len(),
                wanted: e,
            });
        }
        attempts += 1;
        let mut edge = sample(&mut rng, n, m).into_vec();
        edge.sort_unstable();
        let clash = edge
            .iter()
            .enumerate()
            .any(|(i, &u)| edge[i + 1..].iter().any(|&v| pair_used[u * n + v]));
        if clash {
            continue;
        }
        for (i, &u) in edge.iter().enumerate() {
            for &v in &edge[i + 1..] {
                pair_used[u * n + v] = true;
            }
        }
        accepted.push(edge);
    }

    let mut relabel = vec![usize::MAX; n];
    let mut next = 0;
    for a in 0..n {
        if accepted.iter().any(|edge| edge.contains(&a)) {
            relabel[a] = next;
            next += 1;
        }
    }
    let hyperedges = accepted
        .into_iter()
        .map(|edge| edge.into_iter().map(|a| relabel[a]).collect())
        .collect();
    LinearHypergraph::new(next, m, hyperedges)
}
