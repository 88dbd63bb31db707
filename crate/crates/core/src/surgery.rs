//! Gluing, bridge cutting and pendant attachment, each with its surface-area
//! inequality checked in exact rational arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact;
use crate::graph::Graph;
use crate::metrics::surface_area;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum SurgeryKind {
    Glue,
    Cut,
    Pend,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurgeryOutcome {
    pub kind: SurgeryKind,
    /// One graph for glue and pend, the two components for cut.
    pub results: Vec<Graph>,
    /// Surface areas of the input graphs.
    pub before_surface: Vec<f64>,
    /// Surface areas of the result graphs.
    pub after_surface: Vec<f64>,
    /// Glue: `S(after) <= sum S(before)`. Cut and pend: `S(before) <= sum S(after)`.
    pub inequality_ok: bool,
}

fn exact_sum(graphs: &[&Graph]) -> BigRational {
    graphs
        .iter()
        .fold(BigRational::zero(), |acc, g| acc + exact::surface_area(g))
}

/// Identifies `i1` in `g1` with `i2` in `g2`. The result lists the vertices
/// of `g1` first (the merged vertex keeps index `i1`), then those of `g2`
/// other than `i2` in their original order.
pub fn glue_at_vertices(g1: &Graph, g2: &Graph, i1: usize, i2: usize) -> Result<SurgeryOutcome> {
    g1.degree(i1)?;
    g2.degree(i2)?;
    let (n1, n2) = (g1.n(), g2.n());
    let n = n1 + n2 - 1;
    let place = |v: usize| match v.cmp(&i2) {
        core::cmp::Ordering::Equal => i1,
        core::cmp::Ordering::Less => n1 + v,
        core::cmp::Ordering::Greater => n1 + v - 1,
    };
    let mut adj = vec![0.0; n * n];
    for i in 0..n1 {
        adj[i * n..i * n + n1].copy_from_slice(g1.row(i));
    }
    for i in 0..n2 {
        for j in 0..n2 {
            adj[place(i) * n + place(j)] += g2.weight(i, j);
        }
    }
    let glued = Graph::from_dense(n, adj)?;
    let inequality_ok = exact::surface_area(&glued) <= exact_sum(&[g1, g2]);
    Ok(SurgeryOutcome {
        kind: SurgeryKind::Glue,
        before_surface: vec![surface_area(g1), surface_area(g2)],
        after_surface: vec![surface_area(&glued)],
        results: vec![glued],
        inequality_ok,
    })
}

/// Deletes the bridge `{i, j}` from a connected graph and returns both
/// components, the one containing `i` first. Components left with a vertex of
/// zero degree are rejected.
pub fn cut_edge(g: &Graph, i: usize, j: usize) -> Result<SurgeryOutcome> {
    g.degree(i)?;
    g.degree(j)?;
    if i == j || g.weight(i, j) == 0.0 {
        return Err(Error::NotAnEdge { i, j });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut adj = g.adjacency().to_vec();
    adj[i * n + j] = 0.0;
    adj[j * n + i] = 0.0;
    let side_i = reachable(n, &adj, i);
    if side_i[j] {
        return Err(Error::NotABridge { i, j });
    }
    for v in [i, j] {
        if (0..n).all(|k| adj[k * n + v] == 0.0) {
            return Err(Error::DegenerateComponent { i, j });
        }
    }
    let first: Vec<usize> = (0..n).filter(|&v| side_i[v]).collect();
    let second: Vec<usize> = (0..n).filter(|&v| !side_i[v]).collect();
    let mut results = Vec::with_capacity(2);
    for part in [&first, &second] {
        let m = part.len();
        let mut sub = vec![0.0; m * m];
        for (a, &x) in part.iter().enumerate() {
            for (b, &y) in part.iter().enumerate() {
                sub[a * m + b] = adj[x * n + y];
            }
        }
        results.push(Graph::from_dense(m, sub)?);
    }
    let inequality_ok = exact::surface_area(g) <= exact_sum(&[&results[0], &results[1]]);
    Ok(SurgeryOutcome {
        kind: SurgeryKind::Cut,
        before_surface: vec![surface_area(g)],
        after_surface: results.iter().map(surface_area).collect(),
        results,
        inequality_ok,
    })
}

fn reachable(n: usize, adj: &[f64], s: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen[v] && adj[u * n + v] != 0.0 {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

/// Adds a new vertex `n` joined to `i` by a unit edge. Unweighted graphs only.
pub fn attach_pending_edge(g: &Graph, i: usize) -> Result<SurgeryOutcome> {
    g.degree(i)?;
    if !g.is_unweighted() {
        return Err(Error::NotApplicable("pendant attachment needs an unweighted graph".into()));
    }
    let n = g.n();
    let m = n + 1;
    let mut adj = vec![0.0; m * m];
    for r in 0..n {
        adj[r * m..r * m + n].copy_from_slice(g.row(r));
    }
    adj[i * m + n] = 1.0;
    adj[n * m + i] = 1.0;
    let grown = Graph::from_dense(m, adj)?;
    let inequality_ok = exact::surface_area(g) <= exact::surface_area(&grown);
    Ok(SurgeryOutcome {
        kind: SurgeryKind::Pend,
        before_surface: vec![surface_area(g)],
        after_surface: vec![surface_area(&grown)],
        results: vec![grown],
        inequality_ok,
    })
}
