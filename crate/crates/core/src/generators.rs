//! Unweighted, loop-free graph families.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named graph family together with its size parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `K_n`.
    Complete(usize),
    /// Two copies of `K_n` joined by a single bridge between vertex `n-1`
    /// of the first copy and vertex `n` (first vertex of the second copy).
    Barbell(usize),
    /// `K_{d,d}` with sides `0..d` and `d..2d`.
    BipartiteComplete(usize),
    /// Star on `m > 2` leaves whose center (vertex 0) continues into a
    /// path with `n` edges. Leaves are `1..=m`, the path is `m+1..=m+n`.
    StarPath(usize, usize),
    /// Path with `k` edges (`k + 1` vertices).
    Path(usize),
    /// Cycle on `k >= 3` vertices.
    Cycle(usize),
    /// `p x q` grid, vertex `(r, c)` at index `r * q + c`.
    Grid(usize, usize),
    /// Hub (vertex 0) joined to every vertex of a `k`-cycle.
    Wheel(usize),
    /// Center (vertex 0) with `m` leaves.
    Star(usize),
}

/// A family with one free size parameter, used for sequence sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Complete,
    Barbell,
    BipartiteComplete,
    Path,
    Cycle,
    /// Square `k x k` grids.
    Grid,
    Wheel,
    Star,
}

impl FamilyKind {
    pub fn at(self, k: usize) -> Family {
        match self {
            FamilyKind::Complete => Family::Complete(k),
            FamilyKind::Barbell => Family::Barbell(k),
            FamilyKind::BipartiteComplete => Family::BipartiteComplete(k),
            FamilyKind::Path => Family::Path(k),
            FamilyKind::Cycle => Family::Cycle(k),
            FamilyKind::Grid => Family::Grid(k, k),
            FamilyKind::Wheel => Family::Wheel(k),
            FamilyKind::Star => Family::Star(k),
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "complete" => FamilyKind::Complete,
            "barbell" => FamilyKind::Barbell,
            "bipartite_complete" => FamilyKind::BipartiteComplete,
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "grid" => FamilyKind::Grid,
            "wheel" => FamilyKind::Wheel,
            "star" => FamilyKind::Star,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "family `{other}` has no single size parameter"
                )))
            }
        })
    }
}

fn invalid(msg: &str) -> Error {
    Error::InvalidParameter(msg.to_string())
}

impl Family {
    /// Parses a family name plus its numeric parameters, e.g.
    /// `("star_path", [7, 5])`.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "family `{name}` takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let family = match name {
            "complete" => {
                want(1)?;
                Family::Complete(params[0])
            }
            "barbell" => {
                want(1)?;
                Family::Barbell(params[0])
            }
            "bipartite_complete" => {
                want(1)?;
                Family::BipartiteComplete(params[0])
            }
            "star_path" => {
                want(2)?;
                Family::StarPath(params[0], params[1])
            }
            "path" => {
                want(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                want(1)?;
                Family::Cycle(params[0])
            }
            "grid" => {
                want(2)?;
                Family::Grid(params[0], params[1])
            }
            "wheel" => {
                want(1)?;
                Family::Wheel(params[0])
            }
            "star" => {
                want(1)?;
                Family::Star(params[0])
            }
            other => return Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        };
        Ok(family)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete(_) => "complete",
            Family::Barbell(_) => "barbell",
            Family::BipartiteComplete(_) => "bipartite_complete",
            Family::StarPath(..) => "star_path",
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Grid(..) => "grid",
            Family::Wheel(_) => "wheel",
            Family::Star(_) => "star",
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Family::StarPath(a, b) | Family::Grid(a, b) => format!("{}({a},{b})", self.name()),
            Family::Complete(k)
            | Family::Barbell(k)
            | Family::BipartiteComplete(k)
            | Family::Path(k)
            | Family::Cycle(k)
            | Family::Wheel(k)
            | Family::Star(k) => format!("{}({k})", self.name()),
        }
    }

    /// Vertex count of the generated graph (unchecked parameters).
    pub fn vertex_count(&self) -> usize {
        match *self {
            Family::Complete(n) => n,
            Family::Barbell(n) => 2 * n,
            Family::BipartiteComplete(d) => 2 * d,
            Family::StarPath(m, n) => m + n + 1,
            Family::Path(k) => k + 1,
            Family::Cycle(k) => k,
            Family::Grid(p, q) => p * q,
            Family::Wheel(k) => k + 1,
            Family::Star(m) => m + 1,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        let (n, edges) = self.edge_list()?;
        Graph::from_unweighted_edges(n, edges)
    }

    fn edge_list(&self) -> Result<(usize, Vec<(usize, usize)>)> {
        let mut edges = Vec::new();
        let n = match *self {
            Family::Complete(n) => {
                if n < 2 {
                    return Err(invalid("complete graph needs n >= 2"));
                }
                clique(&mut edges, 0, n);
                n
            }
            Family::Barbell(n) => {
                if n < 1 {
                    return Err(invalid("barbell needs n >= 1"));
                }
                clique(&mut edges, 0, n);
                clique(&mut edges, n, n);
                edges.push((n - 1, n));
                2 * n
            }
            Family::BipartiteComplete(d) => {
                if d < 1 {
                    return Err(invalid("bipartite_complete needs d >= 1"));
                }
                for i in 0..d {
                    for j in d..2 * d {
                        edges.push((i, j));
                    }
                }
                2 * d
            }
            Family::StarPath(m, n) => {
                if m <= 2 {
                    return Err(invalid("star_path needs m > 2 outer vertices"));
                }
                if n < 1 {
                    return Err(invalid("star_path needs n >= 1 path edges"));
                }
                for leaf in 1..=m {
                    edges.push((0, leaf));
                }
                let mut prev = 0;
                for v in m + 1..=m + n {
                    edges.push((prev, v));
                    prev = v;
                }
                m + n + 1
            }
            Family::Path(k) => {
                if k < 1 {
                    return Err(invalid("path needs k >= 1 edges"));
                }
                edges.extend((0..k).map(|i| (i, i + 1)));
                k + 1
            }
            Family::Cycle(k) => {
                if k < 3 {
                    return Err(invalid("cycle needs k >= 3"));
                }
                edges.extend((0..k).map(|i| (i, (i + 1) % k)));
                k
            }
            Family::Grid(p, q) => {
                if p < 1 || q < 1 || p * q < 2 {
                    return Err(invalid("grid needs p, q >= 1 and at least two vertices"));
                }
                for r in 0..p {
                    for c in 0..q {
                        let v = r * q + c;
                        if c + 1 < q {
                            edges.push((v, v + 1));
                        }
                        if r + 1 < p {
                            edges.push((v, v + q));
                        }
                    }
                }
                p * q
            }
            Family::Wheel(k) => {
                if k < 3 {
                    return Err(invalid("wheel needs k >= 3 rim vertices"));
                }
                for i in 0..k {
                    edges.push((0, i + 1));
                    edges.push((i + 1, (i + 1) % k + 1));
                }
                k + 1
            }
            Family::Star(m) => {
                if m < 1 {
                    return Err(invalid("star needs m >= 1 leaves"));
                }
                edges.extend((1..=m).map(|leaf| (0, leaf)));
                m + 1
            }
        };
        Ok((n, edges))
    }
}

fn clique(edges: &mut Vec<(usize, usize)>, offset: usize, n: usize) {
    for i in 0..n {
        for j in i + 1..n {
            edges.push((offset + i, offset + j));
        }
    }
}
