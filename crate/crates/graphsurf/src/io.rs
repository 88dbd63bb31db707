//! Graph and potential file formats.
//!
//! Edge list: one `i j [w]` triple per line, 1-based labels, weight 1 when
//! omitted. Blank lines and lines starting with `#` are skipped. The vertex
//! count is the largest label.
//!
//! JSON: `{"n": 3, "edges": [[1, 2, 0.5], [2, 3, 1]], "potential": [0, 1, 0]}`
//! with `potential` optional and the weight optional per edge.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use graphsurf_core::{Graph, Potential};
use serde::{Deserialize, Serialize};

use crate::json::{format_g17, to_string_compact};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("invalid JSON graph: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] graphsurf_core::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Edgelist,
    Json,
}

impl GraphFormat {
    /// `.json` files are JSON, everything else an edge list.
    pub fn infer(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => GraphFormat::Json,
            _ => GraphFormat::Edgelist,
        }
    }
}

/// A graph and the potential carried by its file, if any.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphInput {
    pub graph: Graph,
    pub potential: Option<Potential>,
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Read { path: path.display().to_string(), source })
}

pub fn load_graph(path: &Path, format: Option<GraphFormat>) -> Result<GraphInput, FormatError> {
    let text = read(path)?;
    match format.unwrap_or_else(|| GraphFormat::infer(path)) {
        GraphFormat::Edgelist => Ok(GraphInput { graph: parse_edge_list(&text)?, potential: None }),
        GraphFormat::Json => parse_json_graph(&text),
    }
}

fn line_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Line { line, message: message.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut n = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(line_err(line, format!("expected `i j [w]`, found {} fields", fields.len())));
        }
        let label = |s: &str| -> Result<usize, FormatError> {
            match usize::from_str(s) {
                Ok(v) if v >= 1 => Ok(v),
                _ => Err(line_err(line, format!("`{s}` is not a 1-based vertex label"))),
            }
        };
        let (i, j) = (label(fields[0])?, label(fields[1])?);
        let w = match fields.get(2) {
            Some(s) => f64::from_str(s).map_err(|_| line_err(line, format!("`{s}` is not a number")))?,
            None => 1.0,
        };
        if !(w.is_finite() && w > 0.0) {
            return Err(line_err(line, format!("weight {w} must be positive and finite")));
        }
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(line_err(line, format!("duplicate edge {i} {j}")));
        }
        n = n.max(i).max(j);
        edges.push((i - 1, j - 1, w));
    }
    if n == 0 {
        return Err(FormatError::Invalid("edge list has no edges".into()));
    }
    Ok(Graph::from_edges(n, edges)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    n: usize,
    edges: Vec<Vec<f64>>,
    #[serde(default)]
    potential: Option<Vec<f64>>,
}

fn json_label(x: f64, n: usize, k: usize) -> Result<usize, FormatError> {
    if x.fract() != 0.0 || x < 1.0 || x > n as f64 {
        return Err(FormatError::Invalid(format!("edge {k}: label {x} is not in 1..={n}")));
    }
    Ok(x as usize)
}

pub fn parse_json_graph(text: &str) -> Result<GraphInput, FormatError> {
    let raw: JsonGraph = serde_json::from_str(text)?;
    let mut edges = Vec::with_capacity(raw.edges.len());
    let mut seen = HashSet::new();
    for (k, e) in raw.edges.iter().enumerate() {
        let (i, j, w) = match e.as_slice() {
            [i, j] => (*i, *j, 1.0),
            [i, j, w] => (*i, *j, *w),
            _ => return Err(FormatError::Invalid(format!("edge {k}: expected [i, j] or [i, j, w]"))),
        };
        let (i, j) = (json_label(i, raw.n, k)?, json_label(j, raw.n, k)?);
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(FormatError::Invalid(format!("duplicate edge {i} {j}")));
        }
        edges.push((i - 1, j - 1, w));
    }
    let graph = Graph::from_edges(raw.n, edges)?;
    let potential = match raw.potential {
        Some(values) => {
            if values.len() != raw.n {
                return Err(graphsurf_core::Error::PotentialLength { expected: raw.n, found: values.len() }.into());
            }
            Some(Potential::new(values)?)
        }
        None => None,
    };
    Ok(GraphInput { graph, potential })
}

/// Reads a potential: a JSON array or whitespace-separated numbers.
pub fn load_potential(path: &Path) -> Result<Potential, FormatError> {
    parse_potential(&read(path)?)
}

pub fn parse_potential(text: &str) -> Result<Potential, FormatError> {
    let values: Vec<f64> = if text.trim_start().starts_with('[') {
        serde_json::from_str(text)?
    } else {
        text.split_whitespace()
            .map(|s| f64::from_str(s).map_err(|_| FormatError::Invalid(format!("`{s}` is not a number"))))
            .collect::<Result<_, _>>()?
    };
    Ok(Potential::new(values)?)
}

#[derive(Serialize)]
struct JsonGraphOut<'a> {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    potential: Option<&'a [f64]>,
}

/// Upper-triangle edges as 1-based `(i, j, w)`, `i <= j`.
pub fn labeled_edges(g: &Graph) -> Vec<(usize, usize, f64)> {
    g.edges().map(|(i, j, w)| (i + 1, j + 1, w)).collect()
}

pub fn write_json_graph(g: &Graph, potential: Option<&Potential>) -> String {
    let out = JsonGraphOut { n: g.n(), edges: labeled_edges(g), potential: potential.map(Potential::values) };
    let mut s = to_string_compact(&out).expect("graph serializes");
    s.push('\n');
    s
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    for (i, j, w) in labeled_edges(g) {
        writeln!(s, "{i} {j} {}", format_g17(w)).expect("writing to a String");
    }
    s
}
