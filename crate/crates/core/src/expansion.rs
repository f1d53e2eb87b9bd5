//! Partition balance functionals and the expansion parameters `ψ_k`, `φ_k`.
//!
//! For a partition `π = {S_1, …, S_k}`:
//!
//! ```text
//! γ(π)  = min_{i≠j} e(S_i,S_j) / max_i Vol(S_i)
//! γ*(π) = max_{i≠j} e(S_i,S_j) / min_i Vol(S_i)
//! ψ_k   = max over k-partitions of γ
//! φ_k   = min over k-partitions of γ*      (φ_2 is the Cheeger constant)
//! ```
//!
//! Quotient Laplacian eigenvalues satisfy `kγ(π) ≤ θ_1` and
//! `θ_{k-1} ≤ kγ*(π)`; with interlacing this gives `kψ_k ≤ λ_{n-k+1}` and
//! `kφ_k ≥ λ_{k-1}`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::colouring::{enumerate_proper_colourings, is_regular_colouring, weights_equal};
use crate::eigen::{self, Spectrum};
use crate::graph::{Graph, Partition};
use crate::laplacian::{
    laplacian_spectrum, normalized_laplacian, quotient_graph, quotient_laplacian, sigma,
    QuotientGraph,
};
use crate::{Error, Result, Verdict, EIGEN_TOL, THEOREM_TOL};

/// Default vertex limit for exhaustive `ψ_k`/`φ_k`.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 12;

/// Tolerance for the equality cases of the `1/(k-1)` bounds on
/// non-integer weights.
pub const EQUALITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpansionResult {
    pub value: f64,
    pub argpartition: Partition,
    pub exact: bool,
    pub k: usize,
}

/// Extremes of the pairwise cuts and class volumes of a partition.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Extremes {
    min_cut: f64,
    max_cut: f64,
    min_vol: f64,
    max_vol: f64,
}

impl Extremes {
    fn of(q: &QuotientGraph) -> Self {
        let (min_cut, max_cut) = q
            .pair_weights()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), (_, _, w)| {
                (lo.min(w), hi.max(w))
            });
        let (min_vol, max_vol) = q
            .class_volumes()
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            });
        Self {
            min_cut,
            max_cut,
            min_vol,
            max_vol,
        }
    }

    fn gamma(&self) -> f64 {
        self.min_cut / self.max_vol
    }

    fn gamma_star(&self) -> f64 {
        self.max_cut / self.min_vol
    }
}

fn extremes(g: &Graph, p: &Partition) -> Result<Extremes> {
    if p.class_count() < 2 {
        return Err(Error::SingleClass);
    }
    Ok(Extremes::of(&quotient_graph(g, p)?))
}

/// `γ(π)`; zero when some pair of classes has no edges between them.
pub fn gamma(g: &Graph, p: &Partition) -> Result<f64> {
    Ok(extremes(g, p)?.gamma())
}

/// `γ*(π)`.
pub fn gamma_star(g: &Graph, p: &Partition) -> Result<f64> {
    Ok(extremes(g, p)?.gamma_star())
}

/// True iff `γ(π) = 1/(k-1)`, compared exactly for integer weights.
pub fn gamma_meets_bound(g: &Graph, p: &Partition) -> Result<bool> {
    let e = extremes(g, p)?;
    let k1 = (p.class_count() - 1) as f64;
    Ok(bound_equal(g, e.min_cut * k1, e.max_vol))
}

/// True iff `γ*(π) = 1/(k-1)`, compared exactly for integer weights.
pub fn gamma_star_meets_bound(g: &Graph, p: &Partition) -> Result<bool> {
    let e = extremes(g, p)?;
    let k1 = (p.class_count() - 1) as f64;
    Ok(bound_equal(g, e.max_cut * k1, e.min_vol))
}

fn bound_equal(g: &Graph, a: f64, b: f64) -> bool {
    if g.has_integer_weights() {
        // integer sums below 2^53 are exact
        a == b
    } else {
        (a - b).abs() <= EQUALITY_TOL * a.abs().max(b.abs()).max(1.0)
    }
}

/// Calls `f` with every set partition of `0..n` into exactly `k` blocks, as
/// restricted growth strings in lexicographic order.
pub fn for_each_partition(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k == 0 || k > n {
        return;
    }
    let mut rgs = vec![0usize; n];
    fn rec(rgs: &mut [usize], a: usize, used: usize, k: usize, f: &mut impl FnMut(&[usize])) {
        let n = rgs.len();
        if a == n {
            if used == k {
                f(rgs);
            }
            return;
        }
        if k - used > n - a {
            return;
        }
        let top = if used < k { used } else { k - 1 };
        for c in 0..=top {
            rgs[a] = c;
            rec(rgs, a + 1, used.max(c + 1), k, f);
        }
    }
    rgs[0] = 0;
    rec(&mut rgs, 1, 1, k, &mut f);
}

fn check_exact_args(g: &Graph, k: usize, vertex_limit: usize) -> Result<()> {
    let n = g.order();
    if n > vertex_limit {
        return Err(Error::TooLarge {
            n,
            limit: vertex_limit,
        });
    }
    if k < 2 || k > n {
        return Err(Error::InvalidClassCount { k, n });
    }
    Ok(())
}

fn exhaustive(
    g: &Graph,
    k: usize,
    vertex_limit: usize,
    score: impl Fn(&Extremes) -> f64,
    better: impl Fn(f64, f64) -> bool,
) -> Result<ExpansionResult> {
    check_exact_args(g, k, vertex_limit)?;
    let mut best: Option<(f64, Vec<usize>)> = None;
    let mut failure = None;
    for_each_partition(g.order(), k, |rgs| {
        if failure.is_some() {
            return;
        }
        let p = Partition::from_parts_unchecked(rgs.to_vec(), k);
        match quotient_graph(g, &p) {
            Ok(q) => {
                let value = score(&Extremes::of(&q));
                if best.as_ref().is_none_or(|(b, _)| better(value, *b)) {
                    best = Some((value, rgs.to_vec()));
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let (value, rgs) = best.expect("at least one k-partition exists");
    Ok(ExpansionResult {
        value,
        argpartition: Partition::from_parts_unchecked(rgs, k),
        exact: true,
        k,
    })
}

/// `ψ_k` by enumerating every `k`-partition; ties go to the
/// lexicographically first restricted growth string.
pub fn psi_exact(g: &Graph, k: usize, vertex_limit: usize) -> Result<ExpansionResult> {
    exhaustive(g, k, vertex_limit, Extremes::gamma, |new, old| new > old)
}

/// `φ_k` by enumerating every `k`-partition.
pub fn phi_exact(g: &Graph, k: usize, vertex_limit: usize) -> Result<ExpansionResult> {
    exhaustive(g, k, vertex_limit, Extremes::gamma_star, |new, old| {
        new < old
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// minimise γ* (φ_k)
    Phi,
    /// maximise γ (ψ_k)
    Psi,
}

impl Goal {
    /// Lower is better.
    fn cost(self, e: &Extremes) -> f64 {
        match self {
            Goal::Phi => e.gamma_star(),
            Goal::Psi => -e.gamma(),
        }
    }
}

/// Spectral-embedding heuristic for `φ_k`; the value is an upper bound.
pub fn phi_heuristic(g: &Graph, k: usize, seed: u64) -> Result<ExpansionResult> {
    heuristic(g, k, seed, Goal::Phi)
}

/// Spectral-embedding heuristic for `ψ_k`; the value is a lower bound.
pub fn psi_heuristic(g: &Graph, k: usize, seed: u64) -> Result<ExpansionResult> {
    heuristic(g, k, seed, Goal::Psi)
}

fn heuristic(g: &Graph, k: usize, seed: u64, goal: Goal) -> Result<ExpansionResult> {
    let n = g.order();
    if k < 2 || k > n {
        return Err(Error::InvalidClassCount { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spectrum = eigen::eigendecompose(&normalized_laplacian(g), EIGEN_TOL)?;
    let vectors = spectrum
        .eigenvectors()
        .expect("eigendecompose returns vectors");
    let columns: Vec<usize> = match goal {
        Goal::Phi => (0..k).collect(),
        Goal::Psi => (n - k..n).collect(),
    };
    let points: Vec<Vec<f64>> = (0..n)
        .map(|a| {
            let row: Vec<f64> = columns.iter().map(|&j| vectors[(a, j)]).collect();
            let norm = row.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 0.0 {
                row.iter().map(|x| x / norm).collect()
            } else {
                row
            }
        })
        .collect();

    let assignment = kmeans(&points, k, &mut rng);
    let assignment = fill_empty_classes(assignment, k, &mut rng);
    let start = Partition::new(assignment, k)?;
    let partition = local_search(g, start, goal, &mut rng)?;
    let e = extremes(g, &partition)?;
    let value = match goal {
        Goal::Phi => e.gamma_star(),
        Goal::Psi => e.gamma(),
    };
    Ok(ExpansionResult {
        value,
        argpartition: partition.canonical(),
        exact: false,
        k,
    })
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Lloyd iterations from a k-means++ start.
fn kmeans(points: &[Vec<f64>], k: usize, rng: &mut impl Rng) -> Vec<usize> {
    let n = points.len();
    let mut centres = vec![points[rng.gen_range(0..n)].clone()];
    while centres.len() < k {
        let weights: Vec<f64> = points
            .iter()
            .map(|p| {
                centres
                    .iter()
                    .map(|c| dist2(p, c))
                    .fold(f64::INFINITY, f64::min)
            })
            .collect();
        let total: f64 = weights.iter().sum();
        let pick = if total > 0.0 {
            let mut target = rng.gen::<f64>() * total;
            let mut chosen = n - 1;
            for (i, w) in weights.iter().enumerate() {
                if target < *w {
                    chosen = i;
                    break;
                }
                target -= w;
            }
            chosen
        } else {
            rng.gen_range(0..n)
        };
        centres.push(points[pick].clone());
    }

    let mut assignment = vec![0usize; n];
    for _ in 0..50 {
        let mut changed = false;
        for (a, p) in points.iter().enumerate() {
            let best = (0..k)
                .min_by(|&x, &y| dist2(p, &centres[x]).total_cmp(&dist2(p, &centres[y])))
                .unwrap();
            if assignment[a] != best {
                assignment[a] = best;
                changed = true;
            }
        }
        let dim = points[0].len();
        let mut sums = vec![vec![0.0; dim]; k];
        let mut counts = vec![0usize; k];
        for (a, p) in points.iter().enumerate() {
            counts[assignment[a]] += 1;
            for (s, x) in sums[assignment[a]].iter_mut().zip(p) {
                *s += x;
            }
        }
        for c in 0..k {
            if counts[c] > 0 {
                centres[c] = sums[c].iter().map(|s| s / counts[c] as f64).collect();
            }
        }
        if !changed {
            break;
        }
    }
    assignment
}

/// Moves single vertices out of the largest classes until no class is empty.
fn fill_empty_classes(mut assignment: Vec<usize>, k: usize, rng: &mut impl Rng) -> Vec<usize> {
    loop {
        let mut counts = vec![0usize; k];
        for &c in &assignment {
            counts[c] += 1;
        }
        let Some(empty) = counts.iter().position(|&c| c == 0) else {
            return assignment;
        };
        let largest = (0..k).max_by_key(|&c| counts[c]).unwrap();
        let members: Vec<usize> = (0..assignment.len())
            .filter(|&a| assignment[a] == largest)
            .collect();
        assignment[*members.choose(rng).unwrap()] = empty;
    }
}

/// First-improvement single-vertex moves, at most `100·n` evaluations.
fn local_search(g: &Graph, start: Partition, goal: Goal, rng: &mut impl Rng) -> Result<Partition> {
    let n = g.order();
    let k = start.class_count();
    let mut assignment = start.assignment().to_vec();
    let mut sizes = vec![0usize; k];
    for &c in &assignment {
        sizes[c] += 1;
    }
    let mut current = goal.cost(&extremes(g, &start)?);
    let mut order: Vec<usize> = (0..n).collect();
    let mut budget = 100 * n;

    'outer: loop {
        order.shuffle(rng);
        for &a in &order {
            let from = assignment[a];
            if sizes[from] == 1 {
                continue;
            }
            for to in 0..k {
                if to == from {
                    continue;
                }
                if budget == 0 {
                    break 'outer;
                }
                budget -= 1;
                assignment[a] = to;
                let candidate = Partition::from_parts_unchecked(assignment.clone(), k);
                let cost = goal.cost(&Extremes::of(&quotient_graph(g, &candidate)?));
                if cost < current - 1e-15 {
                    current = cost;
                    sizes[from] -= 1;
                    sizes[to] += 1;
                    continue 'outer;
                }
                assignment[a] = from;
            }
        }
        break;
    }
    Partition::new(assignment, k)
}

/// Both inequalities relating a partition to its quotient spectrum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientExpansionCheck {
    pub k: usize,
    pub k_gamma: f64,
    pub theta_1: f64,
    pub theta_max: f64,
    pub k_gamma_star: f64,
    pub holds: bool,
}

/// `kγ(π) ≤ θ_1` and `θ_{k-1} ≤ kγ*(π)` for the quotient Laplacian.
pub fn check_quotient_expansion(g: &Graph, p: &Partition) -> Result<QuotientExpansionCheck> {
    let k = p.class_count();
    if k < 2 {
        return Err(Error::SingleClass);
    }
    let q = quotient_graph(g, p)?;
    let e = Extremes::of(&q);
    let theta = eigen::eigenvalues(&quotient_laplacian(&q), EIGEN_TOL)?;
    let kf = k as f64;
    let (k_gamma, k_gamma_star) = (kf * e.gamma(), kf * e.gamma_star());
    let (theta_1, theta_max) = (theta.values()[1], theta.largest());
    Ok(QuotientExpansionCheck {
        k,
        k_gamma,
        theta_1,
        theta_max,
        k_gamma_star,
        holds: k_gamma <= theta_1 + THEOREM_TOL && theta_max <= k_gamma_star + THEOREM_TOL,
    })
}

/// Exact `ψ_k` and `φ_k` for every `k ∈ 2..=n` from a single pass over all
/// set partitions.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionProfile {
    /// `psi[k]`, defined for `2 ≤ k ≤ n`.
    pub psi: Vec<f64>,
    pub phi: Vec<f64>,
}

impl ExpansionProfile {
    pub fn exhaustive(g: &Graph, vertex_limit: usize) -> Result<Self> {
        let n = g.order();
        if n > vertex_limit {
            return Err(Error::TooLarge {
                n,
                limit: vertex_limit,
            });
        }
        let mut psi = vec![f64::NAN; n + 1];
        let mut phi = vec![f64::NAN; n + 1];
        for k in 2..=n {
            psi[k] = psi_exact(g, k, vertex_limit)?.value;
            phi[k] = phi_exact(g, k, vertex_limit)?.value;
        }
        Ok(Self { psi, phi })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpansionBoundsCheck {
    pub k: usize,
    pub psi_k: f64,
    pub phi_k: f64,
    /// `λ_{n-k+1}`, the `(k-1)`-th largest eigenvalue.
    pub lambda_upper: f64,
    /// `λ_{k-1}`.
    pub lambda_lower: f64,
    pub holds: bool,
}

/// `kψ_k ≤ λ_{n-k+1}` and `kφ_k ≥ λ_{k-1}` with exact `ψ_k`, `φ_k`.
pub fn check_expansion_bounds(
    g: &Graph,
    k: usize,
    vertex_limit: usize,
) -> Result<ExpansionBoundsCheck> {
    let psi = psi_exact(g, k, vertex_limit)?.value;
    let phi = phi_exact(g, k, vertex_limit)?.value;
    let s = laplacian_spectrum(g, EIGEN_TOL)?;
    Ok(expansion_bounds_from_values(&s, k, psi, phi))
}

/// The inequalities of [`check_expansion_bounds`] from precomputed values.
pub fn expansion_bounds_from_values(
    s: &Spectrum,
    k: usize,
    psi: f64,
    phi: f64,
) -> ExpansionBoundsCheck {
    let n = s.len();
    let lambda_upper = s.values()[n - k + 1];
    let lambda_lower = s.values()[k - 1];
    let kf = k as f64;
    ExpansionBoundsCheck {
        k,
        psi_k: psi,
        phi_k: phi,
        lambda_upper,
        lambda_lower,
        holds: kf * psi <= lambda_upper + THEOREM_TOL && kf * phi >= lambda_lower - THEOREM_TOL,
    }
}

/// A graph with a regular `k`-colouring and `σ_{k-1} = k` has
/// `λ_max = k/(k-1)`.
pub fn check_regular_extremal(g: &Graph, k: usize, cap: usize) -> Result<Verdict> {
    if k < 2 {
        return Err(Error::SingleClass);
    }
    let n = g.order();
    if k > n {
        return Ok(Verdict::HypothesisNotMet {
            reason: format!("{k} classes exceed {n} vertices"),
        });
    }
    let s = laplacian_spectrum(g, EIGEN_TOL)?;
    let sk = sigma(&s, k - 1)?;
    if (sk - k as f64).abs() > THEOREM_TOL {
        return Ok(Verdict::HypothesisNotMet {
            reason: format!("sigma_(k-1) = {sk} differs from k = {k}"),
        });
    }
    let found = enumerate_proper_colourings(g, k, cap)?;
    let mut regular = None;
    for p in &found.colourings {
        if is_regular_colouring(g, p)? {
            regular = Some(p);
            break;
        }
    }
    if regular.is_none() {
        return Ok(Verdict::HypothesisNotMet {
            reason: format!(
                "no regular {k}-colouring among {} found",
                found.colourings.len()
            ),
        });
    }
    let target = k as f64 / (k - 1) as f64;
    let lambda = s.largest();
    Ok(Verdict::from_check(
        (lambda - target).abs() <= THEOREM_TOL,
        || format!("largest eigenvalue {lambda} differs from k/(k-1) = {target}"),
    ))
}

/// Whether `π` is a proper colouring with equal cuts between every pair of
/// classes; the equality case of both `1/(k-1)` bounds.
pub fn is_regular_partition(g: &Graph, p: &Partition) -> Result<bool> {
    if g.monochromatic_edge(p).is_some() {
        return Ok(false);
    }
    let q = quotient_graph(g, p)?;
    let mut pairs = q.pair_weights().map(|(_, _, w)| w);
    Ok(match pairs.next() {
        Some(w0) => pairs.all(|w| weights_equal(w, w0)),
        None => true,
    })
}
