//! Cheeger constant `h(G) = min_X E(X, V \ X) / min(vol X, vol V \ X)`.
//!
//! [`cheeger_exact`] enumerates every cut with vertex 0 on the `X` side;
//! [`cheeger_sweep`] scans the prefix cuts of the `D^{-1/2}`-scaled Fiedler
//! vector and can only overestimate `h`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::math::{le_tol, sqrt};
use crate::metrics::Potential;
use crate::parallel::{chunk_range, ChunkRunner, Sequential};
use crate::spectral::{eigenvalues, normalize_fiedler};
use crate::subsets::{fresh_cut, fresh_side_sum, lex_less, CutWalker};

pub const DEFAULT_EXACT_MAX: usize = 22;
/// Masks are `u64`, so enumeration never goes beyond this many vertices.
pub const HARD_EXACT_MAX: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum CutMethod {
    Exact,
    Sweep,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CutResult {
    /// The side of the cut containing vertex 0.
    pub cut_set: VertexSet,
    pub ratio: f64,
    pub method: CutMethod,
}

/// `E(X, V \ X) / min(vol X, vol V \ X)` for a non-empty proper subset.
pub fn cut_ratio(g: &Graph, x: &VertexSet) -> Result<f64> {
    let crossing = g.boundary_weight(x)?;
    let vol = g.volume(x)?;
    let rest = g.volume(&x.complement())?;
    Ok(crossing / vol.min(rest))
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter("a cut needs at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

struct Best {
    ratio: f64,
    mask: u64,
}

impl Best {
    fn better_than(&self, other: &Best) -> bool {
        self.ratio < other.ratio || (self.ratio == other.ratio && lex_less(self.mask, other.mask))
    }
}

fn fresh_ratio(g: &Graph, full: u64, mask: u64) -> f64 {
    let n = g.n();
    let vol = fresh_side_sum(n, g.degrees(), mask);
    let rest = fresh_side_sum(n, g.degrees(), full & !mask);
    fresh_cut(n, g.adjacency(), mask) / vol.min(rest)
}

fn exact_chunk(g: &Graph, lo: u64, hi: u64) -> Option<Best> {
    if lo >= hi {
        return None;
    }
    let n = g.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let total = g.total_volume();
    let mut walker = CutWalker::new(n, g.adjacency(), g.degrees(), lo);
    let mut best: Option<Best> = None;
    for rank in lo..hi {
        if rank > lo {
            walker.advance();
        }
        if walker.mask == full {
            continue;
        }
        let approx = walker.cut / walker.side_sum.min(total - walker.side_sum);
        let threshold = best.as_ref().map_or(f64::INFINITY, |b| b.ratio * (1.0 + 1e-9) + 1e-300);
        if approx <= threshold {
            let candidate = Best { ratio: fresh_ratio(g, full, walker.mask), mask: walker.mask };
            if best.as_ref().is_none_or(|b| candidate.better_than(b)) {
                best = Some(candidate);
            }
        }
    }
    best
}

/// Exhaustive Cheeger constant; ties go to the lexicographically smallest
/// vertex list.
pub fn cheeger_exact(g: &Graph, max_n: usize) -> Result<CutResult> {
    cheeger_exact_with(g, max_n, &Sequential)
}

pub fn cheeger_exact_with<R: ChunkRunner>(g: &Graph, max_n: usize, runner: &R) -> Result<CutResult> {
    require_connected(g)?;
    let cap = max_n.min(HARD_EXACT_MAX);
    if g.n() > cap {
        return Err(Error::TooLarge { n: g.n(), cap });
    }
    let total = 1u64 << (g.n() - 1);
    let chunks = (runner.parallelism() * 4).clamp(1, total as usize);
    let winners = runner.run_chunks(chunks, |idx| {
        let (lo, hi) = chunk_range(total, chunks, idx);
        exact_chunk(g, lo, hi)
    });
    let best = winners
        .into_iter()
        .flatten()
        .reduce(|a, b| if b.better_than(&a) { b } else { a })
        .expect("a connected graph on two or more vertices has a proper cut");
    Ok(CutResult {
        cut_set: VertexSet::from_mask(g.n(), best.mask),
        ratio: best.ratio,
        method: CutMethod::Exact,
    })
}

/// Best prefix cut of the vertices sorted by `fiedler_j / sqrt(deg(j))`.
pub fn cheeger_sweep(g: &Graph) -> Result<CutResult> {
    require_connected(g)?;
    let spectrum = eigenvalues(g, &Potential::zero(g.n()))?;
    let fiedler = normalize_fiedler(g, spectrum.vectors[1].clone());
    sweep_with_vector(g, &fiedler)
}

/// Sweep over an arbitrary embedding vector.
pub fn sweep_with_vector(g: &Graph, vector: &[f64]) -> Result<CutResult> {
    require_connected(g)?;
    let n = g.n();
    if vector.len() != n {
        return Err(Error::VectorLength { expected: n, found: vector.len() });
    }
    let d = g.degrees();
    let key: Vec<f64> = vector.iter().zip(d).map(|(v, di)| v / sqrt(*di)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| key[a].total_cmp(&key[b]).then(a.cmp(&b)));

    let total = g.total_volume();
    let mut inside = alloc::vec![false; n];
    let (mut cut, mut vol) = (0.0, 0.0);
    let mut best = (f64::INFINITY, 0usize);
    for (k, &v) in order.iter().enumerate().take(n - 1) {
        for (j, &w) in g.row(v).iter().enumerate() {
            if j == v || w == 0.0 {
                continue;
            }
            if inside[j] {
                cut -= w;
            } else {
                cut += w;
            }
        }
        inside[v] = true;
        vol += d[v];
        let ratio = cut / vol.min(total - vol);
        if ratio < best.0 {
            best = (ratio, k + 1);
        }
    }
    let mut set = VertexSet::new(n, order[..best.1].iter().copied())?;
    if !set.contains(0) {
        set = set.complement();
    }
    let ratio = cut_ratio(g, &set)?;
    Ok(CutResult { cut_set: set, ratio, method: CutMethod::Sweep })
}

/// Compares `lambda_2(0)` with `2 h(G)`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CheegerCheck {
    pub lambda2: f64,
    pub h: f64,
    pub two_h: f64,
    pub pass: bool,
}

pub fn cheeger_lambda2_check(g: &Graph, max_n: usize, tol: f64) -> Result<CheegerCheck> {
    let h = cheeger_exact(g, max_n)?.ratio;
    let lambda2 = eigenvalues(g, &Potential::zero(g.n()))?.values[1];
    Ok(CheegerCheck { lambda2, h, two_h: 2.0 * h, pass: le_tol(lambda2, 2.0 * h, tol) })
}
