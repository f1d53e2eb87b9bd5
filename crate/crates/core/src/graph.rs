//! Weighted simple graphs, vertex sets and vertex partitions.
//!
//! A [`Graph`] stores a dense symmetric adjacency matrix with zero diagonal
//! and strictly positive degrees. Vertices are the dense range `0..n`.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::{Error, Result};

/// Finite simple weighted graph without isolated vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<f64>,
    degrees: Vec<f64>,
    edges: Vec<(usize, usize, f64)>,
}

impl Graph {
    /// Builds a graph from `(u, v, w)` triples.
    ///
    /// Each unordered pair may appear once, weights must be positive and
    /// every vertex needs at least one incident edge.
    pub fn new(n: usize, weighted_edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut adjacency = vec![0.0; n * n];
        let mut seen = HashSet::with_capacity(weighted_edges.len());
        let mut edges = Vec::with_capacity(weighted_edges.len());
        for &(u, v, w) in weighted_edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if !w.is_finite() || w <= 0.0 {
                return Err(Error::NonpositiveWeight { u, v, w });
            }
            let (a, b) = (u.min(v), u.max(v));
            if !seen.insert((a, b)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adjacency[a * n + b] = w;
            adjacency[b * n + a] = w;
            edges.push((a, b, w));
        }
        edges.sort_by_key(|x| (x.0, x.1));

        let degrees: Vec<f64> = (0..n)
            .map(|a| adjacency[a * n..(a + 1) * n].iter().sum())
            .collect();
        if let Some(isolated) = degrees.iter().position(|&d| d == 0.0) {
            return Err(Error::IsolatedVertex(isolated));
        }
        Ok(Self {
            n,
            adjacency,
            degrees,
            edges,
        })
    }

    /// Unit-weight graph from an edge list.
    pub fn unweighted(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let weighted: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1.0)).collect();
        Self::new(n, &weighted)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Weight of the pair `{a, b}`, zero when not adjacent.
    #[inline]
    pub fn weight(&self, a: usize, b: usize) -> f64 {
        self.adjacency[a * self.n + b]
    }

    /// Row `a` of the adjacency matrix.
    pub fn row(&self, a: usize) -> &[f64] {
        &self.adjacency[a * self.n..(a + 1) * self.n]
    }

    pub fn adjacency(&self) -> &[f64] {
        &self.adjacency
    }

    #[inline]
    pub fn degree(&self, a: usize) -> f64 {
        self.degrees[a]
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    /// Edges as `(u, v, w)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.2).sum()
    }

    /// Neighbours of `a` together with the edge weight.
    pub fn neighbours(&self, a: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.row(a)
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != 0.0)
            .map(|(b, &w)| (b, w))
    }

    /// True when every edge weight is an integer.
    pub fn has_integer_weights(&self) -> bool {
        self.edges.iter().all(|e| e.2.fract() == 0.0)
    }

    /// `Vol(S)`, the sum of degrees over `s`.
    pub fn volume(&self, s: &VertexSet) -> Result<f64> {
        self.check_set(s)?;
        Ok(s.iter().map(|a| self.degrees[a]).sum())
    }

    /// `e(S, T) = Σ_{a∈S, b∈T} A_ab`.
    ///
    /// Pairs are ordered, so `e(S, S)` is twice the weight inside `S`.
    pub fn cut_weight(&self, s: &VertexSet, t: &VertexSet) -> Result<f64> {
        self.check_set(s)?;
        self.check_set(t)?;
        Ok(s.iter()
            .map(|a| t.iter().map(|b| self.weight(a, b)).sum::<f64>())
            .sum())
    }

    /// True iff no edge has both endpoints in one class.
    pub fn is_proper_colouring(&self, p: &Partition) -> Result<bool> {
        self.check_partition(p)?;
        Ok(self.monochromatic_edge(p).is_none())
    }

    /// First edge whose endpoints share a class, if any.
    pub fn monochromatic_edge(&self, p: &Partition) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .find(|&&(u, v, _)| p.class_of(u) == p.class_of(v))
            .map(|&(u, v, _)| (u, v))
    }

    pub fn check_partition(&self, p: &Partition) -> Result<()> {
        if p.len() != self.n {
            return Err(Error::PartitionSizeMismatch {
                partition: p.len(),
                graph: self.n,
            });
        }
        Ok(())
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&a| a >= self.n) {
            Some(vertex) => Err(Error::VertexOutOfRange { vertex, n: self.n }),
            None => Ok(()),
        }
    }

    /// Connected components as a vertex → component index map.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = count;
            queue.push_back(root);
            while let Some(a) = queue.pop_front() {
                for (b, _) in self.neighbours(a) {
                    if label[b] == usize::MAX {
                        label[b] = count;
                        queue.push_back(b);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn is_connected(&self) -> bool {
        self.components().0 == 1
    }

    /// Two-colours the graph by BFS when it is bipartite.
    pub fn bipartition(&self) -> Option<Vec<usize>> {
        let mut side = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if side[root] != usize::MAX {
                continue;
            }
            side[root] = 0;
            queue.push_back(root);
            while let Some(a) = queue.pop_front() {
                for (b, _) in self.neighbours(a) {
                    if side[b] == usize::MAX {
                        side[b] = 1 - side[a];
                        queue.push_back(b);
                    } else if side[b] == side[a] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// True when some connected component is bipartite.
    pub fn has_bipartite_component(&self) -> bool {
        let (count, label) = self.components();
        (0..count).any(|c| self.component_is_bipartite(&label, c))
    }

    fn component_is_bipartite(&self, label: &[usize], c: usize) -> bool {
        let mut side = vec![usize::MAX; self.n];
        let root = label
            .iter()
            .position(|&l| l == c)
            .expect("component is nonempty");
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for (b, _) in self.neighbours(a) {
                if side[b] == usize::MAX {
                    side[b] = 1 - side[a];
                    queue.push_back(b);
                } else if side[b] == side[a] {
                    return false;
                }
            }
        }
        true
    }
}

/// Subset of the vertex range, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: Vec<usize> = members.into_iter().collect();
        let mut seen = HashSet::with_capacity(members.len());
        for &a in &members {
            if !seen.insert(a) {
                return Err(Error::DuplicateVertex(a));
            }
        }
        Ok(Self(members))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn all(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Vertices of `0..n` not in `self`.
    pub fn complement(&self, n: usize) -> Self {
        let inside: HashSet<usize> = self.0.iter().copied().collect();
        Self((0..n).filter(|a| !inside.contains(a)).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0.contains(&a)
    }
}

/// Assignment of every vertex to one of `k` nonempty classes.
///
/// Classes need not be independent sets; see
/// [`Graph::is_proper_colouring`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    assignment: Vec<usize>,
    k: usize,
}

impl Partition {
    /// Partition with exactly `k` classes, all of them used.
    pub fn new(assignment: Vec<usize>, k: usize) -> Result<Self> {
        let mut used = vec![false; k];
        for &c in &assignment {
            if c >= k {
                return Err(Error::IndexOutOfRange {
                    index: c,
                    max: k.saturating_sub(1),
                });
            }
            used[c] = true;
        }
        if let Some(empty) = used.iter().position(|&u| !u) {
            return Err(Error::EmptyClass(empty));
        }
        Ok(Self { assignment, k })
    }

    /// Infers `k` as one more than the largest class label.
    pub fn from_assignment(assignment: Vec<usize>) -> Result<Self> {
        let k = assignment.iter().max().map_or(0, |&c| c + 1);
        Self::new(assignment, k)
    }

    /// Builds the partition from explicit classes covering `0..n`.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut assignment = vec![usize::MAX; n];
        for (j, class) in classes.iter().enumerate() {
            for &a in class {
                if a >= n {
                    return Err(Error::VertexOutOfRange { vertex: a, n });
                }
                if assignment[a] != usize::MAX {
                    return Err(Error::DuplicateVertex(a));
                }
                assignment[a] = j;
            }
        }
        if assignment.contains(&usize::MAX) {
            return Err(Error::PartitionSizeMismatch {
                partition: assignment.iter().filter(|&&c| c != usize::MAX).count(),
                graph: n,
            });
        }
        Self::new(assignment, classes.len())
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            assignment: (0..n).collect(),
            k: n,
        }
    }

    /// The caller guarantees every class in `0..k` is used.
    pub(crate) fn from_parts_unchecked(assignment: Vec<usize>, k: usize) -> Self {
        debug_assert!(Self::new(assignment.clone(), k).is_ok());
        Self { assignment, k }
    }

    pub fn class_count(&self) -> usize {
        self.k
    }

    /// Number of vertices covered.
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    #[inline]
    pub fn class_of(&self, a: usize) -> usize {
        self.assignment[a]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (a, &c) in self.assignment.iter().enumerate() {
            classes[c].push(a);
        }
        classes
    }

    pub fn class_set(&self, j: usize) -> VertexSet {
        VertexSet(
            self.assignment
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == j)
                .map(|(a, _)| a)
                .collect(),
        )
    }

    /// Relabels classes in order of their smallest vertex.
    pub fn canonical(&self) -> Self {
        let mut relabel = vec![usize::MAX; self.k];
        let mut next = 0;
        let assignment = self
            .assignment
            .iter()
            .map(|&c| {
                if relabel[c] == usize::MAX {
                    relabel[c] = next;
                    next += 1;
                }
                relabel[c]
            })
            .collect();
        Self {
            assignment,
            k: self.k,
        }
    }

    pub fn is_canonical(&self) -> bool {
        let mut next = 0;
        for &c in &self.assignment {
            if c > next {
                return false;
            }
            if c == next {
                next += 1;
            }
        }
        true
    }
}
