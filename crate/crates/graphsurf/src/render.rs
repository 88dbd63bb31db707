//! CSV and human-readable renderings.

use std::fmt::Write as _;

use graphsurf_core::report::BoundsReport;

use crate::cli::{CheegerOut, Eigenpair, GapRow, SequenceOut, SurgeryOut};
use crate::json::format_g17;

fn g(x: f64) -> String {
    format_g17(x)
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "undefined".to_string(), g)
}

fn set(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One row per inequality.
pub fn report_csv(r: &BoundsReport) -> String {
    let mut out = String::from("name,lhs,rhs,pass\n");
    for i in &r.inequalities {
        let _ = writeln!(out, "{},{},{},{}", csv_field(&i.name), g(i.lhs), g(i.rhs), i.pass);
    }
    out
}

macro_rules! line {
    ($out:expr, $($arg:tt)*) => {
        let _ = writeln!($out, $($arg)*);
    };
}

pub fn report_human(r: &BoundsReport) -> String {
    let mut o = String::new();
    line!(o, "Graph");
    line!(o, "  n = {}, |E| = {}, unweighted = {}, loop-free = {}, connected = {}", r.n, r.edges, r.unweighted, r.loop_free, r.connected);
    line!(o, "  diameter = {}", r.diameter.map_or("infinite".to_string(), |d| d.to_string()));

    line!(o, "\nSurface area");
    line!(o, "  S       = {}", g(r.s));
    line!(o, "  S_U     = {}", g(r.s_u));
    line!(o, "  S_U(2)  = {}", g(r.s_u_alpha2));
    line!(o, "  C       = {}", g(r.connectivity));
    line!(o, "  C_U     = {}", opt(r.connectivity_effective));
    line!(o, "  n^2/vol = {}", g(r.cauchy_schwarz_floor));

    line!(o, "\nSpectrum of H_U");
    line!(o, "  λ_1     = {}", opt(r.lambda_min));
    line!(o, "  λ_2     = {}", opt(r.lambda2));
    line!(o, "  λ_n     = {}", opt(r.lambda_n));
    line!(o, "  λ_2(0)  = {}", opt(r.lambda2_0));
    line!(o, "  λ_n(0)  = {}", opt(r.lambda_n_0));
    line!(o, "  max residual = {}", opt(r.max_residual));
    line!(o, "  Σ λ_j(U)                 = {}", opt(r.trace_eigen_sum));
    line!(o, "  n - Σ a_jj/deg(j) + S_U  = {}", opt(r.trace_predicted_sum));
    line!(o, "  Σ (λ_j(U) - λ_j(0))      = {}", opt(r.trace_shift_sum));

    line!(o, "\nCheeger constant");
    let method = r.h_method.map_or("none", |m| match m {
        graphsurf_core::cheeger::CutMethod::Exact => "exact",
        graphsurf_core::cheeger::CutMethod::Sweep => "sweep",
    });
    line!(o, "  h = {} ({method})", opt(r.h));
    if let Some(x) = &r.cheeger_set {
        line!(o, "  X = {}", set(x));
    }
    line!(o, "  λ_2(0) + S_U = {}", opt(r.upper_lambda2_potential));
    line!(o, "  2h + S_U     = {}", opt(r.upper_lambda2_cheeger));

    line!(o, "\nRandić index and λ_n lower bound");
    line!(o, "  R_-1 = {}", g(r.randic_minus_one));
    line!(o, "  lower bound on λ_n = {} ({})", opt(r.lower_lambda_n), r.lower_lambda_n_strategy.as_deref().unwrap_or("none"));
    line!(o, "  R_-1 statement form = {}", opt(r.lower_lambda_n_statement));
    if let Some(a) = &r.lower_lambda_n_part_a {
        line!(o, "  V_a = {}", set(a));
    }
    line!(o, "  Q = {}", opt(r.jost_mulas_q));
    line!(o, "  0.54 n Q = {}", opt(r.jost_mulas_tau_cap));

    line!(o, "\nPlanar bounds (planarity asserted: {}, Euler check: {:?})", r.planar_asserted, r.euler_check);
    line!(o, "  δ = {}", g(r.delta));
    line!(o, "  Θ = {}", g(r.theta));
    line!(o, "  (8δ + Θ)/S   = {} (applicable: {})", g(r.planar_bound), r.planar_applicable);
    line!(o, "  8 maxdeg/vol = {} (applicable: {})", g(r.pluemer_bound), r.pluemer_applicable);
    line!(o, "  8 maxdeg/S   = {}", opt(r.pluemer_surface_bound));

    line!(o, "\nInequalities");
    for i in &r.inequalities {
        line!(o, "  {:<30} {} vs {}  {}", i.name, g(i.lhs), g(i.rhs), if i.pass { "PASS" } else { "FAIL" });
    }
    if !r.errors.is_empty() {
        line!(o, "\nNot computed");
        for e in &r.errors {
            line!(o, "  {}: {}", e.field, e.message);
        }
    }
    o
}

pub fn spectrum_csv(pairs: &[Eigenpair]) -> String {
    let mut o = String::from("index,lambda,residual\n");
    for (k, p) in pairs.iter().enumerate() {
        line!(o, "{},{},{}", k + 1, g(p.lambda), g(p.residual));
    }
    o
}

pub fn spectrum_human(pairs: &[Eigenpair]) -> String {
    let mut o = String::new();
    for (k, p) in pairs.iter().enumerate() {
        line!(o, "λ_{:<4} = {:<24} residual {}", k + 1, g(p.lambda), g(p.residual));
    }
    o
}

fn method_name(m: graphsurf_core::cheeger::CutMethod) -> &'static str {
    match m {
        graphsurf_core::cheeger::CutMethod::Exact => "exact",
        graphsurf_core::cheeger::CutMethod::Sweep => "sweep",
    }
}

fn joined(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn cheeger_csv(c: &CheegerOut) -> String {
    let mut o = String::from("h,method,cut_set,sweep_ratio,lambda2,two_h,pass\n");
    line!(o, "{},{},{},{},{},{},{}", g(c.h), method_name(c.method), joined(&c.cut_set), g(c.sweep_ratio), g(c.lambda2), g(c.two_h), c.pass);
    o
}

pub fn cheeger_human(c: &CheegerOut) -> String {
    let mut o = String::new();
    line!(o, "h = {} ({})", g(c.h), method_name(c.method));
    line!(o, "X = {}", set(&c.cut_set));
    line!(o, "V \\ X = {}", set(&c.complement));
    line!(o, "sweep ratio = {}", g(c.sweep_ratio));
    line!(o, "λ_2(0) = {} vs 2h = {}  {}", g(c.lambda2), g(c.two_h), if c.pass { "PASS" } else { "FAIL" });
    o
}

pub fn surgery_csv(s: &SurgeryOut) -> String {
    let mut o = String::from("role,index,surface\n");
    for (k, v) in s.before_surface.iter().enumerate() {
        line!(o, "before,{},{}", k + 1, g(*v));
    }
    for (k, v) in s.after_surface.iter().enumerate() {
        line!(o, "after,{},{}", k + 1, g(*v));
    }
    o
}

pub fn surgery_human(s: &SurgeryOut) -> String {
    let mut o = String::new();
    let fmt = |v: &[f64]| v.iter().map(|x| g(*x)).collect::<Vec<_>>().join(" + ");
    line!(o, "{:?}", s.kind);
    line!(o, "  S before = {}", fmt(&s.before_surface));
    line!(o, "  S after  = {}", fmt(&s.after_surface));
    line!(o, "  inequality holds: {}", s.inequality_ok);
    for (k, r) in s.results.iter().enumerate() {
        line!(o, "  result {}: n = {}, |E| = {}", k + 1, r.n, r.edges.len());
    }
    o
}

pub fn sequence_csv(s: &SequenceOut) -> String {
    let mut o = String::from("k,n,ratio\n");
    for ((k, n), r) in s.ks.iter().zip(&s.profile.sizes).zip(&s.profile.ratios) {
        line!(o, "{k},{n},{}", g(*r));
    }
    o
}

pub fn sequence_human(s: &SequenceOut) -> String {
    let mut o = String::new();
    line!(o, "{}: S/n over {} members", s.family, s.ks.len());
    for ((k, n), r) in s.ks.iter().zip(&s.profile.sizes).zip(&s.profile.ratios) {
        line!(o, "  k = {k:<5} n = {n:<6} S/n = {}", g(*r));
    }
    line!(o, "log-log slope {} (head {}, tail {})", g(s.profile.loglog_slope), g(s.profile.head_slope), g(s.profile.tail_slope));
    line!(o, "classification: {:?}", s.profile.classification);
    o
}

pub fn gap_csv(rows: &[GapRow]) -> String {
    let mut o = String::from("m,n,gamma_direct,gamma_closed,negative\n");
    for r in rows {
        line!(o, "{},{},{},{},{}", r.m, r.n, g(r.gamma_direct), g(r.gamma_closed), r.negative);
    }
    o
}

pub fn gap_human(rows: &[GapRow]) -> String {
    let mut o = String::new();
    for r in rows {
        line!(o, "γ({}, {}) = {}  closed form {}{}", r.m, r.n, g(r.gamma_direct), g(r.gamma_closed), if r.negative { "  < 0" } else { "" });
    }
    o
}
