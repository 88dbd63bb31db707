//! Command-line interface.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 a theorem-backed
//! inequality failed.

use std::ffi::OsString;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use graphsurf_core::bounds;
use graphsurf_core::cheeger::{self, CutMethod};
use graphsurf_core::generators::FamilyKind;
use graphsurf_core::metrics::{analyze_sequence, SequenceProfile, SocialRule};
use graphsurf_core::report::{full_report_with, BoundsReport, ReportOptions};
use graphsurf_core::spectral::{build_operator, eigenvalues, EIGEN_TOL, IDENTITY_TOL};
use graphsurf_core::surgery::{self, SurgeryOutcome};
use graphsurf_core::{Family, Graph, Potential};
use serde::Serialize;

use crate::io::{self, GraphFormat};
use crate::json::to_string_pretty;
use crate::render;
use crate::runner::RayonRunner;

#[derive(Parser, Debug)]
#[command(name = "graphsurf", version, about = "Surface-area invariants and spectral bounds of finite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub output: OutputFormat,

    /// Slack for inequalities and identities (relative to max(1, |rhs|)).
    #[arg(long, global = true, default_value_t = IDENTITY_TOL)]
    pub tol: f64,

    /// Largest accepted eigenpair residual ||Hv - lambda v|| / ||H||_F.
    #[arg(long, global = true, default_value_t = EIGEN_TOL)]
    pub eigen_tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Human,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Every invariant, bound and inequality for one graph.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        caps: Caps,
    },
    /// Eigenvalues of H_U with residual certificates.
    Spectrum {
        #[command(flatten)]
        source: Source,
    },
    /// Cheeger constant (exhaustive up to the cap, sweep above).
    Cheeger {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        caps: Caps,
    },
    /// Glue two graphs, cut a bridge, or attach a pendant edge.
    Surgery {
        #[arg(value_enum)]
        operation: SurgeryOp,
        #[command(flatten)]
        source: Source,
        /// 1-based vertices: glue `i1,i2`; cut `i,j`; pend `i`.
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<usize>,
    },
    /// Ratios S/n along a family and the social classification.
    Sequence {
        #[arg(long)]
        family: String,
        /// Inclusive size range `a..b`.
        #[arg(long)]
        range: String,
        #[arg(long, default_value_t = 1)]
        step: usize,
    },
    /// Planar bound minus the 8 maxdeg / vol bound on star-paths.
    Gap {
        /// Inclusive range `a..b` or a single value.
        #[arg(long)]
        m: String,
        #[arg(long, conflicts_with = "alpha", required_unless_present = "alpha")]
        n: Option<String>,
        /// Path length n = alpha * m.
        #[arg(long)]
        alpha: Option<usize>,
    },
    /// Writes a generated family member as a graph file on stdout.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long, value_delimiter = ',', required = true)]
        param: Vec<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SurgeryOp {
    Glue,
    Cut,
    Pend,
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Graph file; repeat for the second graph of `surgery glue`.
    #[arg(long)]
    pub input: Vec<PathBuf>,
    /// Defaults to json for `.json` files, edgelist otherwise.
    #[arg(long, value_enum)]
    pub format: Option<GraphFormat>,
    #[arg(long, conflicts_with = "input")]
    pub family: Option<String>,
    /// Comma-separated family parameters, e.g. `7,5`.
    #[arg(long, value_delimiter = ',', requires = "family")]
    pub param: Vec<usize>,
    /// Potential file: JSON array or whitespace-separated values.
    #[arg(long, conflicts_with = "potential_const")]
    pub potential: Option<PathBuf>,
    /// Constant potential sigma_j = c.
    #[arg(long)]
    pub potential_const: Option<f64>,
    /// Assert that the graph is planar.
    #[arg(long)]
    pub planar: bool,
}

#[derive(Args, Debug, Clone)]
pub struct Caps {
    #[arg(long, default_value_t = cheeger::DEFAULT_EXACT_MAX as u64, value_parser = clap::value_parser!(u64).range(1..=cheeger::HARD_EXACT_MAX as u64))]
    pub exact_cheeger_max: u64,
    #[arg(long, default_value_t = bounds::DEFAULT_PARTITION_MAX as u64, value_parser = clap::value_parser!(u64).range(1..=cheeger::HARD_EXACT_MAX as u64))]
    pub partition_exhaustive_max: u64,
}

/// What a command printed and whether an inequality failed.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub violation: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.violation {
            2
        } else {
            0
        }
    }

    fn clean(stdout: String) -> Self {
        Self { stdout, violation: false }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> anyhow::Result<Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => return Ok(Outcome::clean(e.to_string())),
        Err(e) => {
            let msg = e.to_string();
            bail!("{}", msg.trim_start_matches("error: ").trim_end());
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    if !(cli.tol > 0.0) || !(cli.eigen_tol > 0.0) {
        bail!("tolerances must be positive");
    }
    match &cli.command {
        Command::Analyze { source, caps } => analyze(cli, source, caps),
        Command::Spectrum { source } => spectrum(cli, source),
        Command::Cheeger { source, caps } => cheeger_cmd(cli, source, caps),
        Command::Surgery { operation, source, vertices } => surgery_cmd(cli, *operation, source, vertices),
        Command::Sequence { family, range, step } => sequence(cli, family, range, *step),
        Command::Gap { m, n, alpha } => gap(cli, m, n.as_deref(), *alpha),
        Command::Generate { family, param, format } => generate(family, param, *format),
    }
}

struct Loaded {
    graph: Graph,
    potential: Potential,
}

fn load_graphs(source: &Source) -> anyhow::Result<Vec<(Graph, Option<Potential>)>> {
    if let Some(name) = &source.family {
        let g = Family::from_name(name, &source.param)?.generate()?;
        return Ok(vec![(g, None)]);
    }
    if source.input.is_empty() {
        bail!("give a graph with --input or --family");
    }
    source
        .input
        .iter()
        .map(|p| {
            let input = io::load_graph(p, source.format).with_context(|| format!("reading {}", p.display()))?;
            Ok((input.graph, input.potential))
        })
        .collect()
}

fn resolve_potential(source: &Source, g: &Graph, from_file: Option<Potential>) -> anyhow::Result<Potential> {
    let u = if let Some(path) = &source.potential {
        io::load_potential(path).with_context(|| format!("reading {}", path.display()))?
    } else if let Some(c) = source.potential_const {
        Potential::constant(g.n(), c)?
    } else if let Some(u) = from_file {
        u
    } else {
        Potential::zero(g.n())
    };
    if u.len() != g.n() {
        bail!("potential has {} values for {} vertices", u.len(), g.n());
    }
    Ok(u)
}

fn load_one(source: &Source) -> anyhow::Result<Loaded> {
    let mut graphs = load_graphs(source)?;
    if graphs.len() != 1 {
        bail!("expected one graph, got {}", graphs.len());
    }
    let (graph, file_u) = graphs.remove(0);
    let potential = resolve_potential(source, &graph, file_u)?;
    Ok(Loaded { graph, potential })
}

fn to_labels(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

/// Report with 1-based vertex labels.
pub fn labeled(mut r: BoundsReport) -> BoundsReport {
    r.cheeger_set = r.cheeger_set.map(|v| to_labels(&v));
    r.lower_lambda_n_part_a = r.lower_lambda_n_part_a.map(|v| to_labels(&v));
    r
}

fn analyze(cli: &Cli, source: &Source, caps: &Caps) -> anyhow::Result<Outcome> {
    let Loaded { graph, potential } = load_one(source)?;
    let options = ReportOptions {
        tol: cli.tol,
        eigen_tol: cli.eigen_tol,
        exact_cheeger_max: caps.exact_cheeger_max as usize,
        partition_exhaustive_max: caps.partition_exhaustive_max as usize,
        planar_asserted: source.planar,
    };
    let runner = RayonRunner::from_env()?;
    let report = labeled(full_report_with(&graph, &potential, &options, &runner)?);
    let stdout = match cli.output {
        OutputFormat::Json => to_string_pretty(&report)?,
        OutputFormat::Csv => render::report_csv(&report),
        OutputFormat::Human => render::report_human(&report),
    };
    Ok(Outcome { stdout, violation: !report.all_pass() })
}

#[derive(Serialize)]
pub struct Eigenpair {
    pub lambda: f64,
    pub residual: f64,
}

fn spectrum(cli: &Cli, source: &Source) -> anyhow::Result<Outcome> {
    let Loaded { graph, potential } = load_one(source)?;
    let s = build_operator(&graph, &potential)?.spectrum(cli.eigen_tol)?;
    let pairs: Vec<Eigenpair> =
        s.values.iter().zip(&s.residuals).map(|(&lambda, &residual)| Eigenpair { lambda, residual }).collect();
    let stdout = match cli.output {
        OutputFormat::Json => to_string_pretty(&pairs)?,
        OutputFormat::Csv => render::spectrum_csv(&pairs),
        OutputFormat::Human => render::spectrum_human(&pairs),
    };
    Ok(Outcome::clean(stdout))
}

#[derive(Serialize)]
pub struct CheegerOut {
    pub n: usize,
    pub h: f64,
    pub method: CutMethod,
    pub cut_set: Vec<usize>,
    pub complement: Vec<usize>,
    pub sweep_ratio: f64,
    pub lambda2: f64,
    pub two_h: f64,
    pub pass: bool,
}

fn cheeger_cmd(cli: &Cli, source: &Source, caps: &Caps) -> anyhow::Result<Outcome> {
    let Loaded { graph, .. } = load_one(source)?;
    let cap = caps.exact_cheeger_max as usize;
    let sweep = cheeger::cheeger_sweep(&graph)?;
    let cut = if graph.n() <= cap {
        cheeger::cheeger_exact_with(&graph, cap, &RayonRunner::from_env()?)?
    } else {
        sweep.clone()
    };
    let lambda2 = eigenvalues(&graph, &Potential::zero(graph.n()))?.values[1];
    let out = CheegerOut {
        n: graph.n(),
        h: cut.ratio,
        method: cut.method,
        cut_set: to_labels(cut.cut_set.members()),
        complement: to_labels(cut.cut_set.complement().members()),
        sweep_ratio: sweep.ratio,
        lambda2,
        two_h: 2.0 * cut.ratio,
        pass: lambda2 <= 2.0 * cut.ratio + cli.tol * (2.0 * cut.ratio).abs().max(1.0)
            && cut.ratio <= sweep.ratio + cli.tol * sweep.ratio.abs().max(1.0),
    };
    let stdout = match cli.output {
        OutputFormat::Json => to_string_pretty(&out)?,
        OutputFormat::Csv => render::cheeger_csv(&out),
        OutputFormat::Human => render::cheeger_human(&out),
    };
    Ok(Outcome { stdout, violation: !out.pass })
}

#[derive(Serialize)]
pub struct GraphOut {
    pub n: usize,
    pub edges: Vec<(usize, usize, f64)>,
}

#[derive(Serialize)]
pub struct SurgeryOut {
    pub kind: surgery::SurgeryKind,
    pub before_surface: Vec<f64>,
    pub after_surface: Vec<f64>,
    pub inequality_ok: bool,
    pub results: Vec<GraphOut>,
}

impl From<SurgeryOutcome> for SurgeryOut {
    fn from(o: SurgeryOutcome) -> Self {
        Self {
            kind: o.kind,
            before_surface: o.before_surface,
            after_surface: o.after_surface,
            inequality_ok: o.inequality_ok,
            results: o.results.iter().map(|g| GraphOut { n: g.n(), edges: io::labeled_edges(g) }).collect(),
        }
    }
}

fn vertex(label: usize) -> anyhow::Result<usize> {
    label.checked_sub(1).ok_or_else(|| anyhow!("vertex labels are 1-based"))
}

fn surgery_cmd(cli: &Cli, op: SurgeryOp, source: &Source, vertices: &[usize]) -> anyhow::Result<Outcome> {
    let graphs = load_graphs(source)?;
    let want_vertices = match op {
        SurgeryOp::Glue | SurgeryOp::Cut => 2,
        SurgeryOp::Pend => 1,
    };
    if vertices.len() != want_vertices {
        bail!("{op:?} takes {want_vertices} vertex label(s), got {}", vertices.len());
    }
    let want_graphs = if op == SurgeryOp::Glue { 2 } else { 1 };
    let outcome = match (op, graphs.as_slice()) {
        (SurgeryOp::Glue, [(g1, _), (g2, _)]) => surgery::glue_at_vertices(g1, g2, vertex(vertices[0])?, vertex(vertices[1])?)?,
        (SurgeryOp::Cut, [(g, _)]) => surgery::cut_edge(g, vertex(vertices[0])?, vertex(vertices[1])?)?,
        (SurgeryOp::Pend, [(g, _)]) => surgery::attach_pending_edge(g, vertex(vertices[0])?)?,
        _ => bail!("{op:?} takes {want_graphs} graph(s), got {}", graphs.len()),
    };
    let out = SurgeryOut::from(outcome);
    let stdout = match cli.output {
        OutputFormat::Json => to_string_pretty(&out)?,
        OutputFormat::Csv => render::surgery_csv(&out),
        OutputFormat::Human => render::surgery_human(&out),
    };
    Ok(Outcome { stdout, violation: !out.inequality_ok })
}

/// `a..b` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> anyhow::Result<RangeInclusive<usize>> {
    let bad = || anyhow!("`{s}` is not a range `a..b`");
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim_start_matches('=').trim().parse().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        bail!("range `{s}` is empty");
    }
    Ok(lo..=hi)
}

#[derive(Serialize)]
pub struct SequenceOut {
    pub family: String,
    pub ks: Vec<usize>,
    #[serde(flatten)]
    pub profile: SequenceProfile,
}

fn sequence(cli: &Cli, family: &str, range: &str, step: usize) -> anyhow::Result<Outcome> {
    if step == 0 {
        bail!("--step must be positive");
    }
    let kind = FamilyKind::parse(family)?;
    let ks: Vec<usize> = parse_range(range)?.step_by(step).collect();
    let profile = analyze_sequence(&ks, |k| kind.at(k).generate(), SocialRule::default())?;
    let out = SequenceOut { family: family.to_string(), ks, profile };
    let stdout = match cli.output {
        OutputFormat::Json => to_string_pretty(&out)?,
        OutputFormat::Csv => render::sequence_csv(&out),
        OutputFormat::Human => render::sequence_human(&out),
    };
    Ok(Outcome::clean(stdout))
}

#[derive(Serialize)]
pub struct GapRow {
    pub m: usize,
    pub n: usize,
    pub gamma_direct: f64,
    pub gamma_closed: f64,
    pub negative: bool,
}

fn gap(cli: &Cli, m: &str, n: Option<&str>, alpha: Option<usize>) -> anyhow::Result<Outcome> {
    let ms = parse_range(m)?;
    let ns = n.map(parse_range).transpose()?;
    let mut rows = Vec::new();
    for m in ms {
        let lengths: Vec<usize> = match (&ns, alpha) {
            (Some(r), _) => r.clone().collect(),
            (None, Some(a)) => vec![a * m],
            (None, None) => bail!("give --n or --alpha"),
        };
        for n in lengths {
            let g = bounds::gap_gamma(m, n)?;
            rows.push(GapRow { m, n, gamma_direct: g.direct, gamma_closed: g.closed_form, negative: g.is_negative() });
        }
    }
    let stdout = match cli.output {
        OutputFormat::Json => to_string_pretty(&rows)?,
        OutputFormat::Csv => render::gap_csv(&rows),
        OutputFormat::Human => render::gap_human(&rows),
    };
    Ok(Outcome::clean(stdout))
}

fn generate(family: &str, param: &[usize], format: GraphFormat) -> anyhow::Result<Outcome> {
    let g = Family::from_name(family, param)?.generate()?;
    Ok(Outcome::clean(match format {
        GraphFormat::Edgelist => io::write_edge_list(&g),
        GraphFormat::Json => io::write_json_graph(&g, None),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..5").unwrap(), 3..=5);
        assert_eq!(parse_range("3..=5").unwrap(), 3..=5);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
