//! Brute-force oracles shared by the integration suites.
//!
//! Nothing here calls into the code paths it is used to check: spectra come
//! from exact integer rank computations, colourings from full assignment
//! enumeration, and the Cheeger constant from a loop over vertex subsets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lapchi::graph::Graph;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    rank
}

/// Nullity of `scale·I + sign·A` for an unweighted graph.
pub fn nullity_shifted_adjacency(g: &Graph, scale: i128, sign: i128) -> usize {
    let n = g.order();
    let m = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let diag = if a == b { scale } else { 0 };
                    diag + sign * g.weight(a, b) as i128
                })
                .collect()
        })
        .collect();
    n - integer_rank(m)
}

/// All proper colourings with exactly `k` used colours, relabelled by first
/// appearance, from the full `k^n` assignment space.
pub fn brute_force_colourings(g: &Graph, k: usize) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let mut out = BTreeSet::new();
    let total = (k as u64).pow(n as u32);
    let mut colour = vec![0usize; n];
    for code in 0..total {
        let mut c = code;
        for slot in colour.iter_mut() {
            *slot = (c % k as u64) as usize;
            c /= k as u64;
        }
        if g.edges().iter().any(|&(u, v, _)| colour[u] == colour[v]) {
            continue;
        }
        let mut relabel = vec![usize::MAX; k];
        let mut next = 0;
        let canon: Vec<usize> = colour
            .iter()
            .map(|&c| {
                if relabel[c] == usize::MAX {
                    relabel[c] = next;
                    next += 1;
                }
                relabel[c]
            })
            .collect();
        if next == k {
            out.insert(canon);
        }
    }
    out
}

/// Smallest `k` with a proper `k`-colouring, by exhaustive assignment search.
pub fn brute_force_chromatic_number(g: &Graph) -> usize {
    (1..=g.order())
        .find(|&k| !brute_force_colourings(g, k).is_empty())
        .expect("n colours always suffice")
}

/// `min_S e(S, S^c) / min(Vol S, Vol S^c)` over nonempty proper subsets.
pub fn cheeger_by_subsets(g: &Graph) -> f64 {
    let n = g.order();
    let mut best = f64::INFINITY;
    for mask in 1u32..(1 << n) - 1 {
        let inside = |a: usize| mask >> a & 1 == 1;
        let mut cut = 0.0;
        for &(u, v, w) in g.edges() {
            if inside(u) != inside(v) {
                cut += w;
            }
        }
        let vol_s: f64 = (0..n).filter(|&a| inside(a)).map(|a| g.degree(a)).sum();
        let vol_t: f64 = (0..n).filter(|&a| !inside(a)).map(|a| g.degree(a)).sum();
        best = best.min(cut / vol_s.min(vol_t));
    }
    best
}

/// Dense `L(G)` built entry by entry from the edge list.
pub fn naive_laplacian(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.order();
    let mut deg = vec![0.0; n];
    for &(u, v, w) in g.edges() {
        deg[u] += w;
        deg[v] += w;
    }
    let mut l = vec![vec![0.0; n]; n];
    for (a, row) in l.iter_mut().enumerate() {
        row[a] = 1.0;
    }
    for &(u, v, w) in g.edges() {
        let x = w / (deg[u] * deg[v]).sqrt();
        l[u][v] -= x;
        l[v][u] -= x;
    }
    l
}

/// `P = D^{1/2} S N^{-1/2}` built from the assignment directly.
pub fn naive_lift(g: &Graph, assignment: &[usize], k: usize) -> Vec<Vec<f64>> {
    let n = g.order();
    let mut vol = vec![0.0; k];
    for a in 0..n {
        vol[assignment[a]] += g.degree(a);
    }
    (0..n)
        .map(|a| {
            (0..k)
                .map(|j| {
                    if assignment[a] == j {
                        g.degree(a).sqrt() / vol[j].sqrt()
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|l| row[l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|r| r[j]).collect())
        .collect()
}

/// Named graphs used across suites, with display names.
pub fn named_graphs() -> Vec<(String, Graph)> {
    use lapchi::corpus::*;
    let mut out = Vec::new();
    for n in 2..=10 {
        out.push((format!("K{n}"), complete(n)));
    }
    for n in 3..=12 {
        out.push((format!("C{n}"), cycle(n)));
    }
    out.push(("Petersen".into(), petersen()));
    out.push(("Q3".into(), cube()));
    for p in 1..=5 {
        for q in p..=5 {
            out.push((format!("K{p},{q}"), complete_bipartite(p, q)));
        }
    }
    out
}
