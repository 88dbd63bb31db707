//! Every invariant and bound for one `(graph, potential)` pair.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bounds::{self, PartitionStrategy};
use crate::cheeger::{self, CutMethod};
use crate::error::{Error, Result};
use crate::graph::{EulerCheck, Graph};
use crate::math::le_tol;
use crate::metrics::{self, Potential};
use crate::parallel::{ChunkRunner, Sequential};
use crate::spectral::{self, build_operator, Spectrum, EIGEN_TOL, IDENTITY_TOL};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReportOptions {
    /// Slack for inequalities and identities, relative to `max(1, |rhs|)`.
    pub tol: f64,
    /// Largest accepted eigenpair residual.
    pub eigen_tol: f64,
    pub exact_cheeger_max: usize,
    pub partition_exhaustive_max: usize,
    pub planar_asserted: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            tol: IDENTITY_TOL,
            eigen_tol: EIGEN_TOL,
            exact_cheeger_max: cheeger::DEFAULT_EXACT_MAX,
            partition_exhaustive_max: bounds::DEFAULT_PARTITION_MAX,
            planar_asserted: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Inequality {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FieldError {
    pub field: String,
    pub message: String,
}

/// Vertex indices in the report are 0-based.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundsReport {
    pub n: usize,
    pub edges: usize,
    pub unweighted: bool,
    pub loop_free: bool,
    pub connected: bool,
    pub diameter: Option<usize>,
    pub planar_asserted: bool,
    pub euler_check: EulerCheck,

    pub s: f64,
    pub s_u: f64,
    pub s_u_alpha2: f64,
    pub connectivity: f64,
    pub connectivity_effective: Option<f64>,
    pub cauchy_schwarz_floor: f64,
    pub randic_minus_one: f64,

    pub lambda_min: Option<f64>,
    pub lambda2: Option<f64>,
    pub lambda_n: Option<f64>,
    pub lambda2_0: Option<f64>,
    pub lambda_n_0: Option<f64>,
    pub max_residual: Option<f64>,
    pub trace_eigen_sum: Option<f64>,
    pub trace_predicted_sum: Option<f64>,
    pub trace_shift_sum: Option<f64>,

    pub h: Option<f64>,
    pub h_method: Option<CutMethod>,
    pub cheeger_set: Option<Vec<usize>>,
    pub upper_lambda2_potential: Option<f64>,
    pub upper_lambda2_cheeger: Option<f64>,

    pub lower_lambda_n: Option<f64>,
    pub lower_lambda_n_statement: Option<f64>,
    pub lower_lambda_n_strategy: Option<String>,
    pub lower_lambda_n_part_a: Option<Vec<usize>>,

    pub jost_mulas_q: Option<f64>,
    pub jost_mulas_tau_cap: Option<f64>,

    pub delta: f64,
    pub theta: f64,
    pub planar_bound: f64,
    pub planar_applicable: bool,
    pub pluemer_bound: f64,
    pub pluemer_surface_bound: Option<f64>,
    pub pluemer_applicable: bool,

    pub errors: Vec<FieldError>,
    pub inequalities: Vec<Inequality>,
}

impl BoundsReport {
    pub fn all_pass(&self) -> bool {
        self.inequalities.iter().all(|i| i.pass)
    }

    pub fn inequality(&self, name: &str) -> Option<&Inequality> {
        self.inequalities.iter().find(|i| i.name == name)
    }
}

struct Builder {
    tol: f64,
    errors: Vec<FieldError>,
    inequalities: Vec<Inequality>,
}

impl Builder {
    fn le(&mut self, name: &str, lhs: f64, rhs: f64) {
        let pass = le_tol(lhs, rhs, self.tol);
        self.inequalities.push(Inequality { name: name.to_string(), lhs, rhs, pass });
    }

    fn eq(&mut self, name: &str, lhs: f64, rhs: f64, pass: bool) {
        self.inequalities.push(Inequality { name: name.to_string(), lhs, rhs, pass });
    }

    fn ok<T>(&mut self, field: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.errors.push(FieldError { field: field.to_string(), message: format!("{e}") });
                None
            }
        }
    }
}

pub fn full_report(g: &Graph, u: &Potential, options: &ReportOptions) -> Result<BoundsReport> {
    full_report_with(g, u, options, &Sequential)
}

/// Computes the report. Only an inconsistent potential or a planarity
/// assertion contradicted by the edge count is fatal; everything else is
/// recorded in `errors` and the affected fields are left empty.
pub fn full_report_with<R: ChunkRunner>(
    g: &Graph,
    u: &Potential,
    options: &ReportOptions,
    runner: &R,
) -> Result<BoundsReport> {
    if !(options.tol > 0.0) {
        return Err(Error::InvalidTolerance(options.tol));
    }
    if !(options.eigen_tol > 0.0) {
        return Err(Error::InvalidTolerance(options.eigen_tol));
    }
    u.check(g)?;
    let planar = bounds::planar_lambda2_bound(g, options.planar_asserted)?;
    let pluemer = bounds::pluemer_bound(g, options.planar_asserted)?;

    let mut b = Builder { tol: options.tol, errors: Vec::new(), inequalities: Vec::new() };
    let n = g.n();
    let zero = Potential::zero(n);
    let connected = g.is_connected();

    let s = metrics::surface_area(g);
    let s_u = metrics::effective_surface_area(g, u)?;
    let s_u_alpha2 = metrics::generalized_surface_area(g, u, 2.0)?;
    let connectivity_effective = b.ok("connectivity_effective", metrics::connectivity_effective(g, u));
    let cauchy_schwarz_floor = metrics::cauchy_schwarz_floor(g);
    b.le("cauchy_schwarz_floor", cauchy_schwarz_floor, s);

    let op = build_operator(g, u)?;
    let with_u = b.ok("spectrum", op.spectrum(options.eigen_tol));
    let without_u: Option<Spectrum> = if u.is_zero() {
        with_u.clone()
    } else {
        b.ok("spectrum_0", spectral::eigenvalues(g, &zero))
    };

    let mut trace = None;
    if let (Some(wu), Some(w0)) = (&with_u, &without_u) {
        if let Some(t) = b.ok("trace", spectral::trace_report(g, u, &op, wu, w0, options.tol)) {
            b.eq("trace_sum_identity", t.eigen_sum, t.predicted_sum, t.sum_ok);
            b.eq("trace_shift_identity", t.shift_sum, t.s_u, t.shift_ok);
            trace = Some(t);
        }
    }

    let cut = if n <= options.exact_cheeger_max {
        b.ok("h", cheeger::cheeger_exact_with(g, options.exact_cheeger_max, runner))
    } else {
        b.ok("h", cheeger::cheeger_sweep(g))
    };

    let mut upper = None;
    if let (Some(wu), Some(w0), Some(c)) = (&with_u, &without_u, &cut) {
        if let Some(r) = b.ok("upper_lambda2", bounds::lambda2_upper_from(g, u, wu, w0, c.ratio, c.method, options.tol)) {
            b.le("lambda2_potential_upper", r.lambda2_u, r.bound1);
            b.le("lambda2_cheeger_upper", r.bound1, r.bound2);
            if c.method == CutMethod::Exact {
                b.le("lambda2_le_two_h", r.lambda2_0, 2.0 * r.h);
            }
            upper = Some(r);
        }
    } else if let (Some(wu), Some(w0)) = (&with_u, &without_u) {
        if let (Some(l2u), Some(l20)) = (wu.lambda2(), w0.lambda2()) {
            b.le("lambda2_potential_upper", l2u, l20 + s_u);
        }
    }

    let mut lower = None;
    let strategy = PartitionStrategy::auto(n, options.partition_exhaustive_max);
    if let Some(wu) = &with_u {
        lower = b.ok("lower_lambda_n", bounds::lambda_n_lower_from(g, u, wu, &strategy, options.tol, runner));
        if let Some(l) = &lower {
            b.le("lambda_n_lower", l.bound, l.lambda_n);
        }
    }

    let q = if g.is_unweighted() && !g.has_loops() {
        b.ok("jost_mulas_q", bounds::jost_mulas_q(g))
    } else {
        None
    };
    let mut tau_cap = None;
    if let Some(q) = q {
        let e = g.edge_count() as f64;
        b.le("jost_mulas_surface", s, e * q);
        if let Some(ln0) = without_u.as_ref().map(Spectrum::lambda_max) {
            let jm = bounds::jost_mulas_from(g, q, ln0, options.tol);
            b.le("jost_mulas_surface_per_edge", s / e, ln0);
            b.le("jost_mulas_q_lower", q, ln0);
            b.le("jost_mulas_tau_cap", ln0, bounds::TAU_FACTOR * n as f64 * q);
            debug_assert_eq!(jm.q, q);
        }
        tau_cap = Some(bounds::TAU_FACTOR * n as f64 * q);
    }

    let lambda2_0 = without_u.as_ref().and_then(Spectrum::lambda2);
    if let Some(l2) = lambda2_0 {
        if planar.applicable {
            b.le("planar_bound", l2, planar.bound);
        }
        if pluemer.applicable {
            b.le("pluemer_bound", l2, pluemer.bound);
            if let Some(sb) = pluemer.surface_bound {
                b.le("pluemer_surface_bound", l2, sb);
            }
        }
    }

    Ok(BoundsReport {
        n,
        edges: g.edge_count(),
        unweighted: g.is_unweighted(),
        loop_free: !g.has_loops(),
        connected,
        diameter: g.diameter(),
        planar_asserted: options.planar_asserted,
        euler_check: planar.euler,
        s,
        s_u,
        s_u_alpha2,
        connectivity: metrics::connectivity(g),
        connectivity_effective,
        cauchy_schwarz_floor,
        randic_minus_one: bounds::randic(g, -1.0).value,
        lambda_min: with_u.as_ref().map(Spectrum::lambda_min),
        lambda2: with_u.as_ref().and_then(Spectrum::lambda2),
        lambda_n: with_u.as_ref().map(Spectrum::lambda_max),
        lambda2_0,
        lambda_n_0: without_u.as_ref().map(Spectrum::lambda_max),
        max_residual: with_u.as_ref().map(Spectrum::max_residual),
        trace_eigen_sum: trace.as_ref().map(|t| t.eigen_sum),
        trace_predicted_sum: trace.as_ref().map(|t| t.predicted_sum),
        trace_shift_sum: trace.as_ref().map(|t| t.shift_sum),
        h: cut.as_ref().map(|c| c.ratio),
        h_method: cut.as_ref().map(|c| c.method),
        cheeger_set: cut.as_ref().map(|c| c.cut_set.members().to_vec()),
        upper_lambda2_potential: upper.map(|r| r.bound1),
        upper_lambda2_cheeger: upper.map(|r| r.bound2),
        lower_lambda_n: lower.as_ref().map(|l| l.bound),
        lower_lambda_n_statement: lower.as_ref().map(|l| l.statement_bound),
        lower_lambda_n_strategy: lower.as_ref().map(|_| strategy_name(&strategy).to_string()),
        lower_lambda_n_part_a: lower.as_ref().map(|l| l.partition.side_a().members().to_vec()),
        jost_mulas_q: q,
        jost_mulas_tau_cap: tau_cap,
        delta: planar.delta,
        theta: planar.theta,
        planar_bound: planar.bound,
        planar_applicable: planar.applicable,
        pluemer_bound: pluemer.bound,
        pluemer_surface_bound: pluemer.surface_bound,
        pluemer_applicable: pluemer.applicable,
        errors: b.errors,
        inequalities: b.inequalities,
    })
}

fn strategy_name(s: &PartitionStrategy) -> &'static str {
    match s {
        PartitionStrategy::Exhaustive { .. } => "exhaustive",
        PartitionStrategy::EigenvectorSign => "eigenvector_sign",
        PartitionStrategy::Given(_) => "given",
    }
}
