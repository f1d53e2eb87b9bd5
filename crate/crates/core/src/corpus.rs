//! Named graph families, seeded random graphs, and exhaustive enumeration
//! of graphs up to isomorphism.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::unweighted(n, edges).expect("family construction is valid")
}

/// `K_n`, `n ≥ 2`.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    build(n, &edges)
}

/// `C_n`, `n ≥ 3`.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
    build(n, &edges)
}

/// `P_n` on `n ≥ 2` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|u| (u - 1, u)).collect();
    build(n, &edges)
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    build(leaves + 1, &edges)
}

/// `K_{p,q}` with sides `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let edges: Vec<_> = (0..p)
        .flat_map(|u| (p..p + q).map(move |v| (u, v)))
        .collect();
    build(p + q, &edges)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i – i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    build(10, &edges)
}

/// The 3-cube `Q_3`.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    build(8, &edges)
}

/// Seeded `G(n, density)` with integer weights in `1..=max_weight`.
///
/// Any vertex left isolated is joined to a random other vertex.
pub fn random_graph(n: usize, density: f64, max_weight: u32, seed: u64) -> Graph {
    assert!(n >= 2, "need at least two vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![vec![0u32; n]; n];
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(density) {
                let w = rng.gen_range(1..=max_weight.max(1));
                adj[u][v] = w;
                adj[v][u] = w;
            }
        }
    }
    for a in 0..n {
        if adj[a].iter().all(|&w| w == 0) {
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            let w = rng.gen_range(1..=max_weight.max(1));
            adj[a][b] = w;
            adj[b][a] = w;
        }
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u][v] > 0)
        .map(|(u, v)| (u, v, adj[u][v] as f64))
        .collect();
    Graph::new(n, &edges).expect("no isolated vertices remain")
}

/// Adjacency as one bitmask per vertex; up to 16 vertices.
type Masks = Vec<u16>;

/// Every graph on `n` vertices up to isomorphism (isolated vertices
/// allowed), as neighbour masks.
///
/// Graphs on `n` vertices are obtained by attaching a new vertex to every
/// subset of each graph on `n - 1` vertices and keeping one representative
/// per canonical form.
fn all_graph_masks(n: usize) -> Vec<Masks> {
    assert!(n <= 10, "exhaustive enumeration is limited to 10 vertices");
    let mut level: Vec<Masks> = vec![vec![0]];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for subset in 0u16..(1 << (size - 1)) {
                let mut h = g.clone();
                for (v, mask) in h.iter_mut().enumerate() {
                    if subset >> v & 1 == 1 {
                        *mask |= 1 << (size - 1);
                    }
                }
                h.push(subset);
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    if n == 0 {
        Vec::new()
    } else {
        level
    }
}

/// Colour refinement: vertex → stable cell rank, isomorphism invariant.
fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut cell: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = (0..n)
                    .filter(|&u| adj[v] >> u & 1 == 1)
                    .map(|u| cell[u])
                    .collect();
                around.sort_unstable();
                (cell[v], around)
            })
            .collect();
        let mut distinct = keys.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| distinct.binary_search(k).expect("key present"))
            .collect();
        let before = {
            let mut c = cell.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let stable = distinct.len() == before;
        cell = next;
        if stable {
            return cell;
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Smallest edge code over all labelings that respect the refined cells.
fn canonical_code(adj: &[u16]) -> u64 {
    let n = adj.len();
    let cell = refine(adj);
    let cells = cell.iter().max().map_or(0, |&c| c + 1);
    let groups: Vec<Vec<usize>> = (0..cells)
        .map(|c| (0..n).filter(|&v| cell[v] == c).collect())
        .collect();
    let choices: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| permutations(g)).collect();

    let mut best = u64::MAX;
    let mut digits = vec![0usize; choices.len()];
    let mut label = vec![0usize; n];
    loop {
        let mut next_label = 0;
        for (options, &d) in choices.iter().zip(&digits) {
            for &v in &options[d] {
                label[v] = next_label;
                next_label += 1;
            }
        }
        let mut code = 0u64;
        for u in 0..n {
            for v in (u + 1)..n {
                if adj[u] >> v & 1 == 1 {
                    let (a, b) = (label[u].min(label[v]), label[u].max(label[v]));
                    code |= 1 << (b * (b - 1) / 2 + a);
                }
            }
        }
        best = best.min(code);

        // mixed-radix increment
        let mut i = 0;
        loop {
            if i == digits.len() {
                return best;
            }
            digits[i] += 1;
            if digits[i] < choices[i].len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn masks_to_graph(adj: &[u16]) -> Option<Graph> {
    let n = adj.len();
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u] >> v & 1 == 1)
        .collect();
    Graph::unweighted(n, &edges).ok()
}

/// Non-isomorphic graphs on `n` vertices without isolated vertices.
pub fn graphs_without_isolated_vertices(n: usize) -> Vec<Graph> {
    all_graph_masks(n)
        .iter()
        .filter_map(|m| masks_to_graph(m))
        .collect()
}

/// Non-isomorphic connected graphs on `n ≥ 2` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs_without_isolated_vertices(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}
