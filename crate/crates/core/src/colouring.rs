//! Colouring search and certification.
//!
//! The exact solver and the enumerator are the ground truth for `χ(G)` and
//! for statements quantified over "any k-colouring". The certification
//! checks decide equitability with respect to `D^{-1}A`, regularity (equal
//! edge counts between every pair of colour classes) and the degree
//! divisibility condition met by colourings of extremal graphs.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::eigen::Spectrum;
use crate::graph::{Graph, Partition};
use crate::laplacian::{quotient_graph, QuotientGraph};
use crate::{Error, Result, Verdict, THEOREM_TOL};

pub const DEFAULT_EXACT_LIMIT: usize = 24;
pub const ENUMERATION_LIMIT: usize = 20;

/// Tolerance on degree fractions in [`is_equitable`].
pub const EQUITABLE_TOL: f64 = 1e-9;

fn neighbour_masks(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|a| g.neighbours(a).fold(0u64, |m, (b, _)| m | 1 << b))
        .collect()
}

/// Chromatic number by DSATUR branch and bound.
pub fn exact_chromatic_number(g: &Graph, vertex_limit: usize) -> Result<usize> {
    Ok(exact_colouring(g, vertex_limit)?.class_count())
}

/// A colouring with `χ(G)` classes, canonically labelled.
pub fn exact_colouring(g: &Graph, vertex_limit: usize) -> Result<Partition> {
    let n = g.order();
    if n > vertex_limit || n > 64 {
        return Err(Error::TooLarge {
            n,
            limit: vertex_limit.min(64),
        });
    }
    let nb = neighbour_masks(g);
    let lower = greedy_clique(&nb);
    let mut best = dsatur(&nb);
    let mut best_count = best.iter().max().map_or(0, |&c| c + 1);
    if best_count > lower {
        let mut search = Search {
            nb: &nb,
            colour: vec![usize::MAX; n],
            lower,
            best_count,
            best: best.clone(),
        };
        search.branch(0, 0);
        best = search.best;
        best_count = search.best_count;
    }
    Ok(Partition::new(best, best_count)?.canonical())
}

fn greedy_clique(nb: &[u64]) -> usize {
    let n = nb.len();
    let mut best = if n > 0 { 1 } else { 0 };
    for start in 0..n {
        let mut clique = 1usize << start;
        let mut candidates = nb[start];
        let mut size = 1;
        while candidates != 0 {
            // candidate with most neighbours among remaining candidates
            let pick = (0..n)
                .filter(|&v| candidates >> v & 1 == 1)
                .max_by_key(|&v| ((nb[v] & candidates).count_ones(), std::cmp::Reverse(v)))
                .expect("candidates nonempty");
            clique |= 1 << pick;
            candidates &= nb[pick];
            size += 1;
        }
        debug_assert!(clique.count_ones() as usize == size);
        best = best.max(size);
    }
    best
}

fn saturation(nb: &[u64], colour: &[usize], v: usize) -> u32 {
    let mut seen = 0u64;
    let mut rest = nb[v];
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if colour[u] != usize::MAX {
            seen |= 1 << colour[u];
        }
    }
    seen.count_ones()
}

fn pick_dsatur_vertex(nb: &[u64], colour: &[usize]) -> Option<usize> {
    (0..nb.len())
        .filter(|&v| colour[v] == usize::MAX)
        .max_by_key(|&v| {
            let uncoloured_degree = (0..nb.len())
                .filter(|&u| nb[v] >> u & 1 == 1 && colour[u] == usize::MAX)
                .count();
            (
                saturation(nb, colour, v),
                uncoloured_degree,
                std::cmp::Reverse(v),
            )
        })
}

fn colour_free(nb: &[u64], colour: &[usize], v: usize, c: usize) -> bool {
    let mut rest = nb[v];
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if colour[u] == c {
            return false;
        }
    }
    true
}

fn dsatur(nb: &[u64]) -> Vec<usize> {
    let mut colour = vec![usize::MAX; nb.len()];
    while let Some(v) = pick_dsatur_vertex(nb, &colour) {
        let c = (0..).find(|&c| colour_free(nb, &colour, v, c)).unwrap();
        colour[v] = c;
    }
    colour
}

struct Search<'a> {
    nb: &'a [u64],
    colour: Vec<usize>,
    lower: usize,
    best_count: usize,
    best: Vec<usize>,
}

impl Search<'_> {
    fn branch(&mut self, coloured: usize, used: usize) {
        if self.best_count == self.lower {
            return;
        }
        let Some(v) = pick_dsatur_vertex(self.nb, &self.colour) else {
            debug_assert_eq!(coloured, self.nb.len());
            if used < self.best_count {
                self.best_count = used;
                self.best = self.colour.clone();
            }
            return;
        };
        for c in 0..=used {
            let next_used = used.max(c + 1);
            if next_used >= self.best_count {
                break;
            }
            if colour_free(self.nb, &self.colour, v, c) {
                self.colour[v] = c;
                self.branch(coloured + 1, next_used);
                self.colour[v] = usize::MAX;
            }
        }
    }
}

/// Proper colourings with exactly `k` nonempty classes.
#[derive(Debug, Clone, PartialEq)]
pub struct ColouringEnumeration {
    /// Canonical colourings in lexicographic order of their assignments.
    pub colourings: Vec<Partition>,
    pub truncated: bool,
}

/// Lists proper `k`-colourings up to class relabelling, stopping at `cap`.
pub fn enumerate_proper_colourings(
    g: &Graph,
    k: usize,
    cap: usize,
) -> Result<ColouringEnumeration> {
    let n = g.order();
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    if k == 0 || k > n {
        return Err(Error::InvalidClassCount { k, n });
    }
    let nb = neighbour_masks(g);
    let mut out = ColouringEnumeration {
        colourings: Vec::new(),
        truncated: false,
    };
    let mut colour = vec![usize::MAX; n];
    enumerate_rec(&nb, k, cap, 0, 0, &mut colour, &mut out);
    Ok(out)
}

fn enumerate_rec(
    nb: &[u64],
    k: usize,
    cap: usize,
    a: usize,
    used: usize,
    colour: &mut Vec<usize>,
    out: &mut ColouringEnumeration,
) {
    if out.truncated {
        return;
    }
    let n = nb.len();
    if a == n {
        if used == k {
            if out.colourings.len() == cap {
                out.truncated = true;
                return;
            }
            out.colourings
                .push(Partition::from_parts_unchecked(colour.clone(), k));
        }
        return;
    }
    // not enough vertices left to open the missing classes
    if k - used > n - a {
        return;
    }
    for c in 0..=used.min(k - 1) {
        if colour_free(nb, colour, a, c) {
            colour[a] = c;
            enumerate_rec(nb, k, cap, a + 1, used.max(c + 1), colour, out);
            colour[a] = usize::MAX;
        }
    }
}

/// A vertex whose degree fraction into a class differs from its class average.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquitableWitness {
    pub vertex: usize,
    pub class: usize,
    /// `e(a, S_j) / d(a)`.
    pub vertex_fraction: f64,
    /// `e(S_i, S_j) / Vol(S_i)` for the class `S_i` containing the vertex.
    pub class_fraction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquitabilityCheck {
    pub equitable: bool,
    pub witness: Option<EquitableWitness>,
}

/// Decides whether `p` is equitable with respect to `D^{-1}A`.
///
/// Each vertex `a ∈ S_i` must send the fraction `e(S_i,S_j)/Vol(S_i)` of its
/// degree into every class `S_j`, including its own.
pub fn is_equitable(g: &Graph, p: &Partition, tol: f64) -> Result<EquitabilityCheck> {
    let q = quotient_graph(g, p)?;
    let k = p.class_count();
    let mut into = vec![0.0; k];
    for a in 0..g.order() {
        into.iter_mut().for_each(|x| *x = 0.0);
        for (b, w) in g.neighbours(a) {
            into[p.class_of(b)] += w;
        }
        let i = p.class_of(a);
        for (j, &e) in into.iter().enumerate() {
            let vertex_fraction = e / g.degree(a);
            let class_fraction = q.weight(i, j) / q.class_volume(i);
            if (vertex_fraction - class_fraction).abs() > tol {
                return Ok(EquitabilityCheck {
                    equitable: false,
                    witness: Some(EquitableWitness {
                        vertex: a,
                        class: j,
                        vertex_fraction,
                        class_fraction,
                    }),
                });
            }
        }
    }
    Ok(EquitabilityCheck {
        equitable: true,
        witness: None,
    })
}

pub(crate) fn weights_equal(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
}

/// Two class pairs with different edge counts, if any.
fn regularity_witness(q: &QuotientGraph) -> Option<((usize, usize), (usize, usize))> {
    let mut pairs = q.pair_weights();
    let (i0, j0, w0) = pairs.next()?;
    pairs
        .find(|&(_, _, w)| !weights_equal(w, w0))
        .map(|(i, j, _)| ((i0, j0), (i, j)))
}

fn require_proper(g: &Graph, p: &Partition) -> Result<()> {
    g.check_partition(p)?;
    match g.monochromatic_edge(p) {
        Some((u, v)) => Err(Error::NotProper(u, v)),
        None => Ok(()),
    }
}

/// True iff the proper colouring has the same edge weight between every
/// pair of classes.
pub fn is_regular_colouring(g: &Graph, p: &Partition) -> Result<bool> {
    require_proper(g, p)?;
    Ok(regularity_witness(&quotient_graph(g, p)?).is_none())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DivisibilityCheck {
    pub ok: bool,
    /// `(vertex, class)` where `e(a, S_j) ≠ d(a)/(k-1)`.
    pub witness: Option<(usize, usize)>,
}

/// Checks `e(a, S_j) = d(a)/(k-1)` for every vertex and every other class.
pub fn check_divisibility(g: &Graph, p: &Partition) -> Result<DivisibilityCheck> {
    require_proper(g, p)?;
    let k = p.class_count();
    if k < 2 {
        return Err(Error::SingleClass);
    }
    let mut into = vec![0.0; k];
    for a in 0..g.order() {
        into.iter_mut().for_each(|x| *x = 0.0);
        for (b, w) in g.neighbours(a) {
            into[p.class_of(b)] += w;
        }
        let own = p.class_of(a);
        for (j, &e) in into.iter().enumerate() {
            if j != own && !weights_equal(e * (k - 1) as f64, g.degree(a)) {
                return Ok(DivisibilityCheck {
                    ok: false,
                    witness: Some((a, j)),
                });
            }
        }
    }
    Ok(DivisibilityCheck {
        ok: true,
        witness: None,
    })
}

/// First-fit colouring along a seeded breadth-first order.
///
/// Each component is explored from a random root with neighbours visited in
/// shuffled order, so bipartite graphs always receive two colours.
pub fn greedy_colouring(g: &Graph, order_seed: u64) -> Partition {
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(order_seed);
    let mut roots: Vec<usize> = (0..n).collect();
    roots.shuffle(&mut rng);

    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &root in &roots {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(a) = queue.pop_front() {
            order.push(a);
            let mut next: Vec<usize> = g.neighbours(a).map(|(b, _)| b).collect();
            next.shuffle(&mut rng);
            for b in next {
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
    }

    let mut colour = vec![usize::MAX; n];
    for &a in &order {
        let taken: Vec<usize> = g.neighbours(a).map(|(b, _)| colour[b]).collect();
        colour[a] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    let k = colour.iter().max().map_or(0, |&c| c + 1);
    Partition::new(colour, k)
        .expect("first-fit uses every colour below its maximum")
        .canonical()
}

/// Uniformly random assignment into exactly `k` nonempty classes.
pub fn random_partition(n: usize, k: usize, rng: &mut impl Rng) -> Result<Partition> {
    if k == 0 || k > n {
        return Err(Error::InvalidClassCount { k, n });
    }
    let mut assignment: Vec<usize> = (0..n)
        .map(|a| if a < k { a } else { rng.gen_range(0..k) })
        .collect();
    assignment.shuffle(rng);
    Partition::new(assignment, k)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateWitness {
    MonochromaticEdge {
        u: usize,
        v: usize,
    },
    NotEquitable(EquitableWitness),
    IrregularPairs {
        first: (usize, usize),
        second: (usize, usize),
    },
    Divisibility {
        vertex: usize,
        class: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ColouringCertificate {
    pub partition: Vec<usize>,
    pub k: usize,
    pub proper: bool,
    pub equitable: bool,
    pub regular: bool,
    pub divisibility_ok: bool,
    pub witnesses: Vec<CertificateWitness>,
}

/// Runs every structural check on `p`.
///
/// Regularity and divisibility are only defined for proper colourings and
/// are reported false otherwise.
pub fn certify(g: &Graph, p: &Partition) -> Result<ColouringCertificate> {
    g.check_partition(p)?;
    let mut witnesses = Vec::new();
    let mono = g.monochromatic_edge(p);
    if let Some((u, v)) = mono {
        witnesses.push(CertificateWitness::MonochromaticEdge { u, v });
    }
    let eq = is_equitable(g, p, EQUITABLE_TOL)?;
    if let Some(w) = eq.witness.clone() {
        witnesses.push(CertificateWitness::NotEquitable(w));
    }
    let proper = mono.is_none();
    let mut regular = false;
    let mut divisibility_ok = false;
    if proper {
        match regularity_witness(&quotient_graph(g, p)?) {
            None => regular = true,
            Some((first, second)) => {
                witnesses.push(CertificateWitness::IrregularPairs { first, second })
            }
        }
        if p.class_count() >= 2 {
            let div = check_divisibility(g, p)?;
            divisibility_ok = div.ok;
            if let Some((vertex, class)) = div.witness {
                witnesses.push(CertificateWitness::Divisibility { vertex, class });
            }
        }
    }
    Ok(ColouringCertificate {
        partition: p.assignment().to_vec(),
        k: p.class_count(),
        proper,
        equitable: eq.equitable,
        regular,
        divisibility_ok,
        witnesses,
    })
}

/// Outcome of checking every `k`-colouring of a graph whose largest
/// Laplacian eigenvalue equals `k/(k-1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalColouringReport {
    pub k: usize,
    pub lambda_max: f64,
    pub target: f64,
    pub hypothesis: bool,
    pub colourings_checked: usize,
    pub truncated: bool,
    pub equitable: Verdict,
    pub regular: Verdict,
    pub divisibility: Verdict,
}

impl ExtremalColouringReport {
    pub fn any_violation(&self) -> bool {
        self.equitable.is_violation()
            || self.regular.is_violation()
            || self.divisibility.is_violation()
    }
}

/// When `λ_max = k/(k-1)` and `k`-colourings exist, every one of them must
/// be equitable, regular, and send exactly `d(a)/(k-1)` of each vertex's
/// edges into every other class.
pub fn check_extremal_colourings(
    g: &Graph,
    spectrum: &Spectrum,
    k: usize,
    cap: usize,
) -> Result<ExtremalColouringReport> {
    if k < 2 {
        return Err(Error::SingleClass);
    }
    let lambda_max = spectrum.largest();
    let target = k as f64 / (k - 1) as f64;
    let mut report = ExtremalColouringReport {
        k,
        lambda_max,
        target,
        hypothesis: false,
        colourings_checked: 0,
        truncated: false,
        equitable: Verdict::HypothesisNotMet {
            reason: String::new(),
        },
        regular: Verdict::HypothesisNotMet {
            reason: String::new(),
        },
        divisibility: Verdict::HypothesisNotMet {
            reason: String::new(),
        },
    };
    let not_met = |reason: String| Verdict::HypothesisNotMet { reason };
    if (lambda_max - target).abs() > THEOREM_TOL {
        let reason = format!("largest eigenvalue {lambda_max} differs from k/(k-1) = {target}");
        report.equitable = not_met(reason.clone());
        report.regular = not_met(reason.clone());
        report.divisibility = not_met(reason);
        return Ok(report);
    }
    if k > g.order() {
        let reason = format!("{k} classes exceed {} vertices", g.order());
        report.equitable = not_met(reason.clone());
        report.regular = not_met(reason.clone());
        report.divisibility = not_met(reason);
        return Ok(report);
    }
    let found = enumerate_proper_colourings(g, k, cap)?;
    if found.colourings.is_empty() {
        let reason = format!("graph has no proper {k}-colouring");
        report.equitable = not_met(reason.clone());
        report.regular = not_met(reason.clone());
        report.divisibility = not_met(reason);
        return Ok(report);
    }
    report.hypothesis = true;
    report.truncated = found.truncated;
    report.colourings_checked = found.colourings.len();

    let mut first_failure: [Option<String>; 3] = [None, None, None];
    for p in &found.colourings {
        let cert = certify(g, p)?;
        let flags = [cert.equitable, cert.regular, cert.divisibility_ok];
        for (slot, ok) in first_failure.iter_mut().zip(flags) {
            if !ok && slot.is_none() {
                *slot = Some(format!(
                    "colouring {:?} fails: {:?}",
                    p.assignment(),
                    cert.witnesses
                ));
            }
        }
    }
    let [eq, reg, div] = first_failure;
    report.equitable = eq.map_or(Verdict::Holds, |detail| Verdict::Violated { detail });
    report.regular = reg.map_or(Verdict::Holds, |detail| Verdict::Violated { detail });
    report.divisibility = div.map_or(Verdict::Holds, |detail| Verdict::Violated { detail });
    Ok(report)
}
