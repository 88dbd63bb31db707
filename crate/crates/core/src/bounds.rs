//! Randić indices and eigenvalue bounds in terms of surface areas.
//!
//! * `lambda_2(U) <= lambda_2(0) + S_U <= 2 h + S_U`
//! * `lambda_n(U) >=` the Rayleigh quotient of `f_j = ±1/sqrt(deg j)`
//! * `S/|E| <= Q <= lambda_n(0) <= 0.54 n Q` for simple graphs
//! * `lambda_2(0) <= (8 delta + Theta) / S` for loop-free planar graphs,
//!   next to the `8 maxdeg / vol(V)` bound it is compared with.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact;
use crate::generators::Family;
use crate::graph::{EulerCheck, Graph, Partition, VertexSet};
use crate::math::{self, le_tol};
use crate::metrics::{effective_surface_area, generalized_surface_area, surface_area, Potential};
use crate::parallel::{chunk_range, ChunkRunner, Sequential};
use crate::spectral::{eigenvalues, Spectrum};
use crate::subsets::{fresh_cut, lex_less, CutWalker};
use crate::cheeger::{self, CutMethod};

/// Which index pairs a Randić sum ranges over.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum RandicScope {
    Global,
    /// `i in V_a`, `j in V_b`.
    Cross,
    WithinA,
    WithinB,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RandicValue {
    pub alpha: f64,
    pub scope: RandicScope,
    pub value: f64,
}

fn randic_sum<F: Fn(usize, usize) -> bool>(g: &Graph, alpha: f64, keep: F) -> f64 {
    let d = g.degrees();
    let mut sum = 0.0;
    for i in 0..g.n() {
        for j in 0..g.n() {
            let a = g.weight(i, j);
            if a != 0.0 && keep(i, j) {
                sum += a * math::powf(d[i] * d[j], alpha);
            }
        }
    }
    0.5 * sum
}

/// `R_alpha(G) = 1/2 sum_{i,j} a_ij (deg(i) deg(j))^alpha`, diagonal included.
pub fn randic(g: &Graph, alpha: f64) -> RandicValue {
    RandicValue { alpha, scope: RandicScope::Global, value: randic_sum(g, alpha, |_, _| true) }
}

/// `R_alpha(G, X x Y) = 1/2 sum a_ij chi_X(i) chi_Y(j) (deg(i) deg(j))^alpha`
/// with `(X, Y)` chosen by `scope`.
pub fn restricted_randic(g: &Graph, alpha: f64, p: &Partition, scope: RandicScope) -> Result<RandicValue> {
    if p.side_a().universe() != g.n() {
        return Err(Error::InvalidPartition("partition does not match the graph".into()));
    }
    let a = p.side_a();
    let value = match scope {
        RandicScope::Global => randic_sum(g, alpha, |_, _| true),
        RandicScope::Cross => randic_sum(g, alpha, |i, j| a.contains(i) && !a.contains(j)),
        RandicScope::WithinA => randic_sum(g, alpha, |i, j| a.contains(i) && a.contains(j)),
        RandicScope::WithinB => randic_sum(g, alpha, |i, j| !a.contains(i) && !a.contains(j)),
    };
    Ok(RandicValue { alpha, scope, value })
}

/// Both upper bounds on `lambda_2(U)`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Lambda2Upper {
    pub lambda2_u: f64,
    pub lambda2_0: f64,
    pub s_u: f64,
    /// `lambda_2(0) + S_U`.
    pub bound1: f64,
    /// `2 h + S_U`, with `h` exact or from the sweep.
    pub bound2: f64,
    pub h: f64,
    pub h_method: CutMethod,
    pub pass: bool,
}

/// `lambda_2(U) <= lambda_2(0) + S_U <= 2h + S_U`. Above `exact_max` vertices
/// the sweep cut replaces `h`, which can only enlarge `bound2`.
pub fn lambda2_upper_cheeger(g: &Graph, u: &Potential, exact_max: usize, tol: f64) -> Result<Lambda2Upper> {
    let with_u = eigenvalues(g, u)?;
    let without_u = eigenvalues(g, &Potential::zero(g.n()))?;
    let cut = if g.n() <= exact_max {
        cheeger::cheeger_exact(g, exact_max)?
    } else {
        cheeger::cheeger_sweep(g)?
    };
    lambda2_upper_from(g, u, &with_u, &without_u, cut.ratio, cut.method, tol)
}

pub(crate) fn lambda2_upper_from(
    g: &Graph,
    u: &Potential,
    with_u: &Spectrum,
    without_u: &Spectrum,
    h: f64,
    h_method: CutMethod,
    tol: f64,
) -> Result<Lambda2Upper> {
    let s_u = effective_surface_area(g, u)?;
    let lambda2_u = with_u.lambda2().ok_or_else(too_small)?;
    let lambda2_0 = without_u.lambda2().ok_or_else(too_small)?;
    let bound1 = lambda2_0 + s_u;
    let bound2 = 2.0 * h + s_u;
    Ok(Lambda2Upper {
        lambda2_u,
        lambda2_0,
        s_u,
        bound1,
        bound2,
        h,
        h_method,
        pass: le_tol(lambda2_u, bound1, tol) && le_tol(bound1, bound2, tol),
    })
}

fn too_small() -> Error {
    Error::InvalidParameter("lambda_2 needs at least two vertices".into())
}

/// Lower bound on `lambda_n(U)` evaluated at one partition: the Rayleigh
/// quotient of `f_j = ±1/sqrt(deg j)` (plus on `V_a`), i.e.
/// `1 + (2 W_ab - W_aa - W_bb) / S + S_U(G, 2) / S` with
/// `W_xy = sum_{(i,j) in X x Y} a_ij / (d_i d_j)`.
pub fn lambda_n_bound(g: &Graph, u: &Potential, p: &Partition) -> Result<f64> {
    let s = surface_area(g);
    let s_u2 = generalized_surface_area(g, u, 2.0)?;
    let (w_ab, w_aa, w_bb) = block_sums(g, p)?;
    Ok(1.0 + (2.0 * w_ab - w_aa - w_bb) / s + s_u2 / s)
}

/// The same bound with the blocks written as restricted Randić indices
/// `R_{-1}` (each carrying its factor 1/2). On `K_{d,d}` this gives 3/2
/// where the Rayleigh quotient gives 2; it is reported for comparison only.
pub fn lambda_n_statement_bound(g: &Graph, u: &Potential, p: &Partition) -> Result<f64> {
    let s = surface_area(g);
    let s_u2 = generalized_surface_area(g, u, 2.0)?;
    let cross = restricted_randic(g, -1.0, p, RandicScope::Cross)?.value;
    let within_a = restricted_randic(g, -1.0, p, RandicScope::WithinA)?.value;
    let within_b = restricted_randic(g, -1.0, p, RandicScope::WithinB)?.value;
    Ok(1.0 + (2.0 * cross - within_a - within_b) / s + s_u2 / s)
}

fn block_sums(g: &Graph, p: &Partition) -> Result<(f64, f64, f64)> {
    if p.side_a().universe() != g.n() {
        return Err(Error::InvalidPartition("partition does not match the graph".into()));
    }
    let d = g.degrees();
    let a = p.side_a();
    let (mut ab, mut aa, mut bb) = (0.0, 0.0, 0.0);
    for i in 0..g.n() {
        for j in 0..g.n() {
            let w = g.weight(i, j);
            if w == 0.0 {
                continue;
            }
            let t = w / (d[i] * d[j]);
            match (a.contains(i), a.contains(j)) {
                (true, false) => ab += t,
                (true, true) => aa += t,
                (false, false) => bb += t,
                (false, true) => {}
            }
        }
    }
    Ok((ab, aa, bb))
}

pub const DEFAULT_PARTITION_MAX: usize = 18;

/// How [`lambda_n_lower`] picks the partition.
#[derive(Clone, Debug, PartialEq)]
pub enum PartitionStrategy {
    /// Every partition with vertex 0 in `V_a`; refused above `max_n`.
    Exhaustive { max_n: usize },
    /// Signs of the `lambda_n(U)` eigenvector.
    EigenvectorSign,
    Given(Partition),
}

impl PartitionStrategy {
    /// Exhaustive up to `max_n` vertices, eigenvector signs above.
    pub fn auto(n: usize, max_n: usize) -> Self {
        if n <= max_n.min(cheeger::HARD_EXACT_MAX) {
            PartitionStrategy::Exhaustive { max_n }
        } else {
            PartitionStrategy::EigenvectorSign
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LambdaNLower {
    pub partition: Partition,
    /// Rayleigh-quotient bound at `partition`.
    pub bound: f64,
    /// Randić-index form at the same partition.
    pub statement_bound: f64,
    pub lambda_n: f64,
    pub pass: bool,
}

pub fn lambda_n_lower(g: &Graph, u: &Potential, strategy: &PartitionStrategy, tol: f64) -> Result<LambdaNLower> {
    lambda_n_lower_with(g, u, strategy, tol, &Sequential)
}

pub fn lambda_n_lower_with<R: ChunkRunner>(
    g: &Graph,
    u: &Potential,
    strategy: &PartitionStrategy,
    tol: f64,
    runner: &R,
) -> Result<LambdaNLower> {
    let spectrum = eigenvalues(g, u)?;
    lambda_n_lower_from(g, u, &spectrum, strategy, tol, runner)
}

pub(crate) fn lambda_n_lower_from<R: ChunkRunner>(
    g: &Graph,
    u: &Potential,
    spectrum: &Spectrum,
    strategy: &PartitionStrategy,
    tol: f64,
    runner: &R,
) -> Result<LambdaNLower> {
    u.check(g)?;
    if g.n() < 2 {
        return Err(Error::InvalidParameter("a partition needs at least two vertices".into()));
    }
    let partition = match strategy {
        PartitionStrategy::Exhaustive { max_n } => best_partition(g, u, *max_n, runner)?,
        PartitionStrategy::EigenvectorSign => sign_partition(g, &spectrum.vectors[g.n() - 1])?,
        PartitionStrategy::Given(p) => p.clone(),
    };
    let bound = lambda_n_bound(g, u, &partition)?;
    let statement_bound = lambda_n_statement_bound(g, u, &partition)?;
    let lambda_n = spectrum.lambda_max();
    Ok(LambdaNLower { partition, bound, statement_bound, lambda_n, pass: le_tol(bound, lambda_n, tol) })
}

fn sign_partition(g: &Graph, v: &[f64]) -> Result<Partition> {
    let n = g.n();
    let flip = v[0] < 0.0;
    let mut side: Vec<usize> = (0..n).filter(|&j| (v[j] >= 0.0) != flip || j == 0).collect();
    if side.len() == n {
        // One-signed vector: move the most extreme opposite entry across.
        let far = (1..n)
            .min_by(|&a, &b| {
                let (x, y) = if flip { (-v[a], -v[b]) } else { (v[a], v[b]) };
                x.total_cmp(&y).then(a.cmp(&b))
            })
            .unwrap_or(n - 1);
        side.retain(|&j| j != far);
    }
    Partition::from_side(VertexSet::new(n, side)?)
}

struct BestPartition {
    value: f64,
    mask: u64,
}

impl BestPartition {
    fn better_than(&self, other: &BestPartition) -> bool {
        self.value > other.value || (self.value == other.value && lex_less(self.mask, other.mask))
    }
}

fn best_partition<R: ChunkRunner>(g: &Graph, u: &Potential, max_n: usize, runner: &R) -> Result<Partition> {
    let n = g.n();
    let cap = max_n.min(cheeger::HARD_EXACT_MAX);
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let d = g.degrees();
    let mut w = alloc::vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            w[i * n + j] = g.weight(i, j) / (d[i] * d[j]);
        }
    }
    let total_w: f64 = w.iter().sum();
    let s = surface_area(g);
    let offset = 1.0 + (generalized_surface_area(g, u, 2.0)? - total_w) / s;
    let value_of = |cut: f64| offset + 4.0 * cut / s;
    let zeros = alloc::vec![0.0; n];
    let full = (1u64 << n) - 1;
    let total = 1u64 << (n - 1);
    let chunks = (runner.parallelism() * 4).clamp(1, total as usize);
    let w = &w;
    let zeros = &zeros;
    let winners = runner.run_chunks(chunks, |idx| {
        let (lo, hi) = chunk_range(total, chunks, idx);
        if lo >= hi {
            return None;
        }
        let mut walker = CutWalker::new(n, w, zeros, lo);
        let mut best: Option<BestPartition> = None;
        for rank in lo..hi {
            if rank > lo {
                walker.advance();
            }
            if walker.mask == full {
                continue;
            }
            let approx = value_of(walker.cut);
            let threshold = best.as_ref().map_or(f64::NEG_INFINITY, |b| b.value - 1e-9 * math::max(1.0, math::abs(b.value)));
            if approx >= threshold {
                let candidate = BestPartition { value: value_of(fresh_cut(n, w, walker.mask)), mask: walker.mask };
                if best.as_ref().is_none_or(|b| candidate.better_than(b)) {
                    best = Some(candidate);
                }
            }
        }
        best
    });
    let best = winners
        .into_iter()
        .flatten()
        .reduce(|a, b| if b.better_than(&a) { b } else { a })
        .expect("n >= 2 leaves at least one partition");
    Partition::from_side(VertexSet::from_mask(n, best.mask))
}

/// Sandwich quantities for unweighted loop-free graphs.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct JostMulas {
    /// `max_{ij in E} 1/deg(i) + 1/deg(j)`.
    pub q: f64,
    pub s: f64,
    pub edges: usize,
    pub lambda_n: f64,
    /// `S <= |E| Q`.
    pub surface_vs_q: bool,
    /// `Q <= lambda_n(0)`.
    pub q_below_lambda_n: bool,
    /// `S / |E| <= lambda_n(0)`.
    pub surface_below_lambda_n: bool,
    /// `lambda_n(0) <= 0.54 n Q`.
    pub tau_cap: bool,
}

pub const TAU_FACTOR: f64 = 0.54;

/// `Q(G)`; defined for unweighted loop-free graphs only.
pub fn jost_mulas_q(g: &Graph) -> Result<f64> {
    if !g.is_unweighted() || g.has_loops() {
        return Err(Error::NotApplicable("Q(G) needs an unweighted loop-free graph".into()));
    }
    let d = g.degrees();
    Ok(g.edges().map(|(i, j, _)| 1.0 / d[i] + 1.0 / d[j]).fold(0.0, f64::max))
}

pub fn jost_mulas(g: &Graph, tol: f64) -> Result<JostMulas> {
    let q = jost_mulas_q(g)?;
    let lambda_n = eigenvalues(g, &Potential::zero(g.n()))?.lambda_max();
    Ok(jost_mulas_from(g, q, lambda_n, tol))
}

pub(crate) fn jost_mulas_from(g: &Graph, q: f64, lambda_n: f64, tol: f64) -> JostMulas {
    let s = surface_area(g);
    let edges = g.edge_count();
    let e = edges as f64;
    JostMulas {
        q,
        s,
        edges,
        lambda_n,
        surface_vs_q: le_tol(s, e * q, tol),
        q_below_lambda_n: le_tol(q, lambda_n, tol),
        surface_below_lambda_n: le_tol(s / e, lambda_n, tol),
        tau_cap: le_tol(lambda_n, TAU_FACTOR * g.n() as f64 * q, tol),
    }
}

/// Vertices grouped by equal weighted degree.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DegreeLevels {
    /// `(degree, members)` in ascending degree order.
    pub levels: Vec<(f64, Vec<usize>)>,
    /// `sum over levels of 1 / degree`.
    pub delta: f64,
}

/// Degrees compared after rounding to 12 significant digits.
fn level_key(d: f64) -> (i64, i32) {
    let mut e = math::floor(math::log10(d)) as i32;
    let scaled = |e: i32| math::round(d * math::powf(10.0, f64::from(11 - e))) as i64;
    let mut m = scaled(e);
    if m >= 1_000_000_000_000 {
        e += 1;
        m = scaled(e);
    } else if m < 100_000_000_000 {
        e -= 1;
        m = scaled(e);
    }
    (m, e)
}

pub fn degree_levels(g: &Graph) -> DegreeLevels {
    let d = g.degrees();
    let mut keyed: Vec<((i64, i32), usize)> = (0..g.n()).map(|j| (level_key(d[j]), j)).collect();
    keyed.sort_by_key(|&((m, e), j)| (e, m, j));
    let mut levels: Vec<(f64, Vec<usize>)> = Vec::new();
    let mut last_key = None;
    for (key, j) in keyed {
        if last_key == Some(key) {
            if let Some(level) = levels.last_mut() {
                level.1.push(j);
            }
        } else {
            levels.push((d[j], alloc::vec![j]));
            last_key = Some(key);
        }
    }
    let delta = levels.iter().map(|(deg, _)| 1.0 / deg).sum();
    DegreeLevels { levels, delta }
}

/// `Theta(G) = sum over ordered pairs with deg(i) != deg(j) of
/// a_ij (1/deg(i)^2 + 1/deg(j)^2)`.
pub fn theta(g: &Graph) -> f64 {
    let d = g.degrees();
    let keys: Vec<(i64, i32)> = d.iter().map(|&x| level_key(x)).collect();
    let mut sum = 0.0;
    for i in 0..g.n() {
        for j in 0..g.n() {
            let a = g.weight(i, j);
            if a != 0.0 && keys[i] != keys[j] {
                sum += a * (1.0 / (d[i] * d[i]) + 1.0 / (d[j] * d[j]));
            }
        }
    }
    sum
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PlanarBound {
    /// `(8 delta + Theta) / S`.
    pub bound: f64,
    pub delta: f64,
    pub theta: f64,
    pub s: f64,
    pub euler: EulerCheck,
    /// The caller asserted planarity, the graph is unweighted and loop-free,
    /// and the Euler condition does not rule planarity out.
    pub applicable: bool,
}

/// `(8 delta + Theta) / S`. Asserting planarity for a graph that violates
/// `|E| <= 3n - 6` is an error.
pub fn planar_lambda2_bound(g: &Graph, planar_asserted: bool) -> Result<PlanarBound> {
    let euler = g.euler_planarity_check();
    if planar_asserted && euler == EulerCheck::Violated {
        return Err(Error::PlanarityContradiction { edges: g.edge_count(), limit: 3 * g.n() - 6 });
    }
    let delta = degree_levels(g).delta;
    let theta = theta(g);
    let s = surface_area(g);
    let applicable = planar_asserted && euler == EulerCheck::Plausible;
    Ok(PlanarBound { bound: (8.0 * delta + theta) / s, delta, theta, s, euler, applicable })
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PluemerBound {
    /// `8 maxdeg / vol(V)`.
    pub bound: f64,
    /// `8 maxdeg / S`, reported for unweighted graphs.
    pub surface_bound: Option<f64>,
    pub applicable: bool,
}

pub fn pluemer_bound(g: &Graph, planar_asserted: bool) -> Result<PluemerBound> {
    let euler = g.euler_planarity_check();
    if planar_asserted && euler == EulerCheck::Violated {
        return Err(Error::PlanarityContradiction { edges: g.edge_count(), limit: 3 * g.n() - 6 });
    }
    let maxdeg = g.max_degree();
    let surface_bound = g.is_unweighted().then(|| 8.0 * maxdeg / surface_area(g));
    Ok(PluemerBound {
        bound: 8.0 * maxdeg / g.total_volume(),
        surface_bound,
        applicable: planar_asserted && euler == EulerCheck::Plausible,
    })
}

/// Planar bound minus the `8 maxdeg / vol` bound on the star-path `S_{m,n}`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Gap {
    pub m: usize,
    pub n: usize,
    pub planar: f64,
    pub pluemer: f64,
    /// Computed from the generated graph.
    pub direct: f64,
    pub closed_form: f64,
}

impl Gap {
    pub fn is_negative(&self) -> bool {
        self.direct < 0.0
    }
}

/// `2(-2m^3 + 7m^2 + 13mn + 13m + 23n - 6) / ((m+n)(2m^2 + mn + 3m + n + 3))`.
/// Numerator and denominator are formed in integer arithmetic, so the only
/// rounding is the final division.
pub fn gap_closed_form(m: usize, n: usize) -> f64 {
    let (m, n) = (m as i128, n as i128);
    let num = 2 * (-2 * m * m * m + 7 * m * m + 13 * m * n + 13 * m + 23 * n - 6);
    let den = (m + n) * (2 * m * m + m * n + 3 * m + n + 3);
    exact::ratio_to_f64(num, den)
}

pub fn gap_gamma(m: usize, n: usize) -> Result<Gap> {
    let g = Family::StarPath(m, n).generate()?;
    let planar = planar_lambda2_bound(&g, true)?.bound;
    let pluemer = pluemer_bound(&g, true)?.bound;
    Ok(Gap { m, n, planar, pluemer, direct: planar - pluemer, closed_form: gap_closed_form(m, n) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::IDENTITY_TOL;
    use alloc::vec;

    fn gen(f: Family) -> Graph {
        f.generate().unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    fn bipartition(d: usize) -> Partition {
        Partition::from_side(VertexSet::new(2 * d, 0..d).unwrap()).unwrap()
    }

    #[test]
    fn randic_examples() {
        assert!((randic(&gen(Family::Complete(3)), -1.0).value - 0.75).abs() < 1e-15);
        for f in [Family::Cycle(7), Family::Complete(5), Family::BipartiteComplete(3)] {
            let g = gen(f);
            let d = g.degrees()[0];
            let r = randic(&g, -0.5).value;
            assert!((r - g.edge_count() as f64 / d).abs() < 1e-12, "{f:?}");
        }
        let g = Graph::from_edges(3, [(0, 1, 0.5), (1, 2, 2.0), (2, 2, 1.5)]).unwrap();
        assert!((randic(&g, 0.0).value - (0.5 + 2.0 + 0.75)).abs() < 1e-15);
    }

    #[test]
    fn restricted_randic_examples() {
        for d in 2..6 {
            let g = gen(Family::BipartiteComplete(d));
            let r = restricted_randic(&g, -1.0, &bipartition(d), RandicScope::Cross).unwrap();
            assert!((r.value - 0.5).abs() < 1e-14);
            let w = restricted_randic(&g, -1.0, &bipartition(d), RandicScope::WithinA).unwrap();
            assert_eq!(w.value, 0.0);
        }
        let p3 = gen(Family::Path(2));
        let ends = Partition::new(VertexSet::new(3, [0, 2]).unwrap(), VertexSet::new(3, [1]).unwrap()).unwrap();
        let r = restricted_randic(&p3, -1.0, &ends, RandicScope::Cross).unwrap();
        assert!((r.value - 0.5).abs() < 1e-15);
    }

    #[test]
    fn lambda2_upper_examples() {
        let g = gen(Family::Cycle(6));
        let r = lambda2_upper_cheeger(&g, &Potential::zero(6), 22, IDENTITY_TOL).unwrap();
        assert_eq!(r.bound1, r.lambda2_0);
        assert!(r.pass);

        for n in 3..8 {
            let r = lambda2_upper_cheeger(&gen(Family::Complete(n)), &Potential::zero(n), 22, IDENTITY_TOL).unwrap();
            assert!(r.bound2 >= n as f64 / (n - 1) as f64 - 1e-12 && r.pass);
        }

        let k3 = gen(Family::Complete(3));
        let ones = Potential::constant(3, 1.0).unwrap();
        let r = lambda2_upper_cheeger(&k3, &ones, 22, IDENTITY_TOL).unwrap();
        assert!((r.s_u - 1.5).abs() < 1e-15);
        assert!(r.lambda2_u <= r.lambda2_0 + 1.5 + 1e-12 && r.pass);
    }

    #[test]
    fn lambda_n_lower_examples() {
        for d in 2..=6 {
            let g = gen(Family::BipartiteComplete(d));
            let z = Potential::zero(2 * d);
            let r = lambda_n_lower(&g, &z, &PartitionStrategy::Exhaustive { max_n: 18 }, IDENTITY_TOL).unwrap();
            assert!((r.bound - 2.0).abs() < 1e-12);
            assert_eq!(r.partition, bipartition(d));
            assert!((r.statement_bound - 1.5).abs() < 1e-12);
            assert!((r.lambda_n - 2.0).abs() < 1e-12 && r.pass);
        }

        let p3 = gen(Family::Path(2));
        let r = lambda_n_lower(&p3, &Potential::zero(3), &PartitionStrategy::Exhaustive { max_n: 18 }, IDENTITY_TOL).unwrap();
        assert!((r.bound - 1.8).abs() < 1e-14, "Rayleigh quotient of (1, -1/sqrt 2, 1)");
        assert_eq!(r.partition.side_b().members(), &[1]);

        let g = gen(Family::Wheel(5));
        let u = Potential::new(vec![0.0, 1.0, 0.5, 2.0, 0.0, 0.25]).unwrap();
        let a = VertexSet::new(6, [0, 2, 3]).unwrap();
        let r = lambda_n_lower(&g, &u, &PartitionStrategy::Given(Partition::from_side(a).unwrap()), IDENTITY_TOL).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn bound_is_rayleigh_quotient() {
        let g = Graph::from_edges(4, [(0, 1, 1.5), (1, 2, 0.5), (2, 3, 2.0), (0, 3, 1.0), (1, 1, 0.75)]).unwrap();
        let u = Potential::new(vec![0.3, 0.0, 1.0, 2.0]).unwrap();
        let p = Partition::from_side(VertexSet::new(4, [0, 2]).unwrap()).unwrap();
        let f: Vec<f64> = p
            .signs()
            .iter()
            .zip(g.degrees())
            .map(|(s, d)| s / d.sqrt())
            .collect();
        let op = crate::spectral::build_operator(&g, &u).unwrap();
        let rq = op.quadratic_form(&f).unwrap() / f.iter().map(|x| x * x).sum::<f64>();
        assert!((lambda_n_bound(&g, &u, &p).unwrap() - rq).abs() < 1e-14);
    }

    #[test]
    fn exhaustive_matches_brute_force() {
        let g = gen(Family::StarPath(3, 3));
        let n = g.n();
        let u = Potential::new((0..n).map(|i| (i % 3) as f64).collect()).unwrap();
        let r = lambda_n_lower(&g, &u, &PartitionStrategy::Exhaustive { max_n: 18 }, IDENTITY_TOL).unwrap();
        let mut best = f64::NEG_INFINITY;
        for mask in 1u64..(1 << n) - 1 {
            let p = Partition::from_side(VertexSet::from_mask(n, mask)).unwrap();
            best = best.max(lambda_n_bound(&g, &u, &p).unwrap());
        }
        assert!((r.bound - best).abs() < 1e-13);
        assert!(r.partition.side_a().contains(0));
    }

    #[test]
    fn eigenvector_sign_strategy() {
        let g = gen(Family::Grid(3, 3));
        let z = Potential::zero(9);
        let r = lambda_n_lower(&g, &z, &PartitionStrategy::EigenvectorSign, IDENTITY_TOL).unwrap();
        assert!(r.pass);
        assert_eq!(r.partition.side_a().members(), &[0, 2, 4, 6, 8]);
    }

    #[test]
    fn exhaustive_cap() {
        let g = gen(Family::Path(9));
        let z = Potential::zero(10);
        assert_eq!(
            lambda_n_lower(&g, &z, &PartitionStrategy::Exhaustive { max_n: 8 }, IDENTITY_TOL),
            Err(Error::TooLarge { n: 10, cap: 8 })
        );
    }

    #[test]
    fn jost_mulas_examples() {
        let k2 = jost_mulas(&gen(Family::Complete(2)), IDENTITY_TOL).unwrap();
        assert_eq!(k2.q, 2.0);
        assert!((k2.lambda_n - 2.0).abs() < 1e-14);
        for m in 1..8 {
            let q = jost_mulas_q(&gen(Family::Star(m))).unwrap();
            assert!((q - (1.0 + 1.0 / m as f64)).abs() < 1e-15);
        }
        assert!((jost_mulas_q(&gen(Family::Cycle(8))).unwrap() - 1.0).abs() < 1e-15);
        let weighted = Graph::from_edges(2, [(0, 1, 2.0)]).unwrap();
        assert!(matches!(jost_mulas_q(&weighted), Err(Error::NotApplicable(_))));
        let r = jost_mulas(&gen(Family::Wheel(7)), IDENTITY_TOL).unwrap();
        assert!(r.surface_vs_q && r.q_below_lambda_n && r.surface_below_lambda_n && r.tau_cap);
    }

    #[test]
    fn degree_level_examples() {
        for (m, n) in [(3, 2), (7, 5), (20, 9)] {
            let l = degree_levels(&gen(Family::StarPath(m, n)));
            let want = 1.0 + 1.0 / (m + 1) as f64 + 0.5;
            assert!(rel(l.delta, want) < 1e-14);
            assert_eq!(l.levels.len(), 3);
        }
        assert_eq!(degree_levels(&gen(Family::Cycle(5))).delta, 0.5);
        assert_eq!(degree_levels(&gen(Family::Path(2))).delta, 1.5);
        let w = Graph::from_edges(3, [(0, 1, 0.1 + 0.2), (1, 2, 0.3), (0, 2, 0.3)]).unwrap();
        assert_eq!(degree_levels(&w).levels.len(), 1, "0.1 + 0.2 rounds to 0.3");
    }

    #[test]
    fn theta_examples() {
        for (m, n) in [(3, 2), (7, 5), (20, 9)] {
            let t = theta(&gen(Family::StarPath(m, n)));
            let want = 2.0 * m as f64 + 3.0 + 2.0 / (m + 1) as f64;
            assert!(rel(t, want) < 1e-14);
        }
        assert_eq!(theta(&gen(Family::Cycle(6))), 0.0);
        assert_eq!(theta(&gen(Family::Complete(5))), 0.0);
        assert!((theta(&gen(Family::Path(2))) - 5.0).abs() < 1e-15);
    }

    #[test]
    fn planar_and_pluemer_examples() {
        let (m, n) = (7usize, 5usize);
        let g = gen(Family::StarPath(m, n));
        let pb = planar_lambda2_bound(&g, true).unwrap();
        let (mf, nf) = (m as f64, n as f64);
        let want = (15.0 + 10.0 / (mf + 1.0) + 2.0 * mf) / (mf + 1.0 / (mf + 1.0) + (nf + 1.0) / 2.0);
        assert!(rel(pb.bound, want) < 1e-14 && pb.applicable);
        let pl = pluemer_bound(&g, true).unwrap();
        assert!(rel(pl.bound, 8.0 * (mf + 1.0) / (2.0 * mf + 2.0 * nf)) < 1e-15);

        let k4 = gen(Family::Complete(4));
        let pb = planar_lambda2_bound(&k4, true).unwrap();
        assert!((pb.bound - 2.0).abs() < 1e-15);
        assert_eq!(pluemer_bound(&k4, true).unwrap().bound, 2.0);

        let c4 = gen(Family::Grid(2, 2));
        assert_eq!(pluemer_bound(&c4, true).unwrap().bound, 2.0);

        let grid = gen(Family::Grid(4, 4));
        let lambda2 = eigenvalues(&grid, &Potential::zero(16)).unwrap().values[1];
        assert!(lambda2 <= planar_lambda2_bound(&grid, true).unwrap().bound);

        let k5 = gen(Family::Complete(5));
        assert!(matches!(planar_lambda2_bound(&k5, true), Err(Error::PlanarityContradiction { .. })));
        assert!(!planar_lambda2_bound(&k5, false).unwrap().applicable);
        let loopy = Graph::from_edges(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 0, 1.0)]).unwrap();
        assert!(!planar_lambda2_bound(&loopy, true).unwrap().applicable);
    }

    #[test]
    fn gap_examples() {
        let g = gap_gamma(7, 5).unwrap();
        assert!(rel(g.direct, g.closed_form) < 1e-12);
        for alpha in [2usize, 3, 5] {
            let m = 200;
            assert!(gap_gamma(m, alpha * m).unwrap().is_negative());
        }
        let (m, alpha) = (60usize, 20usize);
        let g = gap_gamma(m, alpha * m).unwrap();
        assert!(g.planar <= 3.0 / (1.0 + alpha as f64 / 2.0) && g.planar < 2.0);
        assert!(gap_gamma(2, 5).is_err());
    }
}
