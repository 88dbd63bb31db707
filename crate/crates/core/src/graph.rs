//! Weighted undirected graphs with optional loops.
//!
//! A [`Graph`] is a symmetric non-negative `n x n` adjacency matrix stored
//! densely. `a[i][i] > 0` encodes a loop. The weighted degree is the plain
//! column sum, so a loop contributes `a[j][j]` once; the unweighted degree
//! counts a loop twice. Every vertex must have positive weighted degree.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    n: usize,
    adj: Vec<f64>,
    degrees: Vec<f64>,
}

impl Graph {
    /// Builds a graph from a row-major `n x n` adjacency matrix.
    pub fn from_dense(n: usize, adj: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if adj.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: adj.len(),
            });
        }
        for i in 0..n {
            for j in i..n {
                let w = adj[i * n + j];
                if !w.is_finite() || w < 0.0 {
                    return Err(Error::InvalidWeight { i, j, weight: w });
                }
                if w != adj[j * n + i] {
                    return Err(Error::Asymmetric { i, j });
                }
            }
        }
        let degrees: Vec<f64> = (0..n)
            .map(|j| (0..n).map(|i| adj[i * n + j]).sum())
            .collect();
        if let Some(j) = degrees.iter().position(|&d| d <= 0.0) {
            return Err(Error::IsolatedVertex(j));
        }
        Ok(Self { n, adj, degrees })
    }

    /// Builds a graph from `(i, j, w)` triples with 0-based endpoints.
    /// `i == j` is a loop. Each unordered pair may appear at most once and
    /// every weight must be positive and finite.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut adj = vec![0.0; n * n];
        for (i, j, w) in edges {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if !w.is_finite() || w <= 0.0 {
                return Err(Error::InvalidWeight { i, j, weight: w });
            }
            if adj[i * n + j] != 0.0 {
                return Err(Error::DuplicateEdge { i, j });
            }
            adj[i * n + j] = w;
            adj[j * n + i] = w;
        }
        Self::from_dense(n, adj)
    }

    /// Builds an unweighted graph from 0-based edge pairs.
    pub fn from_unweighted_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges(n, edges.into_iter().map(|(i, j)| (i, j, 1.0)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row-major adjacency matrix.
    pub fn adjacency(&self) -> &[f64] {
        &self.adj
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.adj[i * self.n..(i + 1) * self.n]
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.adj[i * self.n + j]
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Weighted degree `sum_i a_ij`.
    pub fn degree(&self, j: usize) -> Result<f64> {
        self.check(j)?;
        Ok(self.degrees[j])
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    /// Number of incident edges, a loop counting twice.
    pub fn unweighted_degree(&self, j: usize) -> Result<usize> {
        self.check(j)?;
        Ok(self
            .row(j)
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != 0.0)
            .map(|(i, _)| if i == j { 2 } else { 1 })
            .sum())
    }

    pub fn max_degree(&self) -> f64 {
        self.degrees.iter().copied().fold(0.0, f64::max)
    }

    /// All weights are 0 or 1.
    pub fn is_unweighted(&self) -> bool {
        self.adj.iter().all(|&w| w == 0.0 || w == 1.0)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|i| self.weight(i, i) != 0.0)
    }

    /// Unordered edges `(i, j, w)` with `i <= j`, loops included.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| {
            (i..self.n).filter_map(move |j| {
                let w = self.weight(i, j);
                (w != 0.0).then_some((i, j, w))
            })
        })
    }

    /// Number of unordered edges, loops included.
    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i)
            .iter()
            .enumerate()
            .filter(move |&(j, &w)| w != 0.0 && j != i)
            .map(|(j, _)| j)
    }

    /// `vol(V) = sum_j deg(j)`.
    pub fn total_volume(&self) -> f64 {
        self.degrees.iter().sum()
    }

    /// `vol(X) = sum_{j in X} deg(j)`.
    pub fn volume(&self, x: &VertexSet) -> Result<f64> {
        self.check_set(x)?;
        Ok(x.iter().map(|j| self.degrees[j]).sum())
    }

    /// Total weight `E(X, V \ X)` of edges crossing the cut.
    pub fn boundary_weight(&self, x: &VertexSet) -> Result<f64> {
        self.check_set(x)?;
        if x.is_empty() || x.len() == self.n {
            return Err(Error::ImproperCut);
        }
        Ok(x
            .iter()
            .map(|i| {
                (0..self.n)
                    .filter(|&j| !x.contains(j))
                    .map(|j| self.weight(i, j))
                    .sum::<f64>()
            })
            .sum())
    }

    fn check_set(&self, x: &VertexSet) -> Result<()> {
        if x.universe() != self.n {
            return Err(Error::InvalidParameter(format!(
                "vertex set over {} vertices used with a graph on {}",
                x.universe(),
                self.n
            )));
        }
        Ok(())
    }

    /// Hop distances from `source` over the support of the adjacency;
    /// `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check(source)?;
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            label[s] = id;
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for v in self.neighbors(u) {
                    if label[v] == usize::MAX {
                        label[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0)
            .map(|d| d.iter().all(Option::is_some))
            .unwrap_or(false)
    }

    /// Largest shortest-path hop count; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s).ok()? {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Subgraph induced by `vertices` (in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            self.check(v)?;
        }
        let m = vertices.len();
        let mut adj = vec![0.0; m * m];
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate() {
                adj[a * m + b] = self.weight(i, j);
            }
        }
        Graph::from_dense(m, adj)
    }

    /// Euler's necessary condition `|E| <= 3n - 6` for simple planar graphs.
    pub fn euler_planarity_check(&self) -> EulerCheck {
        if !self.is_unweighted() || self.has_loops() {
            return EulerCheck::NotApplicable;
        }
        if self.n < 3 {
            return EulerCheck::Plausible;
        }
        if self.edge_count() > 3 * self.n - 6 {
            EulerCheck::Violated
        } else {
            EulerCheck::Plausible
        }
    }
}

/// Outcome of [`Graph::euler_planarity_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum EulerCheck {
    Plausible,
    Violated,
    NotApplicable,
}

/// A subset of `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.last() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(Self { n, members })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, members: Vec::new() }
    }

    /// Members given as a bit mask (bit `i` = vertex `i`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self {
            n,
            members: (0..n.min(64)).filter(|&i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            members: (0..self.n).filter(|&v| !self.contains(v)).collect(),
        }
    }
}

/// Disjoint cover `(V_a, V_b)` of the vertex set with both sides non-empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    a: VertexSet,
    b: VertexSet,
}

impl Partition {
    pub fn new(a: VertexSet, b: VertexSet) -> Result<Self> {
        if a.universe() != b.universe() {
            return Err(Error::InvalidPartition("sides use different universes".into()));
        }
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidPartition("both sides must be non-empty".into()));
        }
        if a.iter().any(|v| b.contains(v)) {
            return Err(Error::InvalidPartition("sides intersect".into()));
        }
        if a.len() + b.len() != a.universe() {
            return Err(Error::InvalidPartition("sides do not cover the vertex set".into()));
        }
        Ok(Self { a, b })
    }

    /// `V_a = x`, `V_b` its complement.
    pub fn from_side(x: VertexSet) -> Result<Self> {
        let b = x.complement();
        Self::new(x, b)
    }

    pub fn side_a(&self) -> &VertexSet {
        &self.a
    }

    pub fn side_b(&self) -> &VertexSet {
        &self.b
    }

    /// `+1` on `V_a`, `-1` on `V_b`.
    pub fn signs(&self) -> Vec<f64> {
        (0..self.a.universe())
            .map(|v| if self.a.contains(v) { 1.0 } else { -1.0 })
            .collect()
    }
}
