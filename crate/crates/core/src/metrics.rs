//! Surface area, effective surface area and the connectivity measures built
//! from them, plus the finite-sample test for social graph sequences.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::math;

/// Non-negative per-vertex potential `sigma`, the diagonal of `U`.
#[derive(Clone, Debug, PartialEq)]
pub struct Potential {
    sigma: Vec<f64>,
}

impl Potential {
    pub fn new(sigma: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = sigma
            .iter()
            .enumerate()
            .find(|(_, &s)| !s.is_finite() || s < 0.0)
        {
            return Err(Error::InvalidPotential { index, value });
        }
        Ok(Self { sigma })
    }

    pub fn zero(n: usize) -> Self {
        Self { sigma: alloc::vec![0.0; n] }
    }

    pub fn constant(n: usize, value: f64) -> Result<Self> {
        Self::new(alloc::vec![value; n])
    }

    pub fn values(&self) -> &[f64] {
        &self.sigma
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.sigma.iter().all(|&s| s == 0.0)
    }

    pub(crate) fn check(&self, g: &Graph) -> Result<()> {
        if self.sigma.len() != g.n() {
            return Err(Error::PotentialLength {
                expected: g.n(),
                found: self.sigma.len(),
            });
        }
        Ok(())
    }
}

/// `S(G) = sum_j 1 / deg(j)`.
pub fn surface_area(g: &Graph) -> f64 {
    g.degrees().iter().map(|d| 1.0 / d).sum()
}

/// `S_U(G) = sum_j sigma_j / deg(j)`.
pub fn effective_surface_area(g: &Graph, u: &Potential) -> Result<f64> {
    generalized_surface_area(g, u, 1.0)
}

/// `S_U(G, alpha) = sum_j sigma_j / deg(j)^alpha`.
pub fn generalized_surface_area(g: &Graph, u: &Potential, alpha: f64) -> Result<f64> {
    u.check(g)?;
    Ok(g
        .degrees()
        .iter()
        .zip(u.values())
        .map(|(&d, &s)| {
            if alpha == 1.0 {
                s / d
            } else {
                s / math::powf(d, alpha)
            }
        })
        .sum())
}

/// `C(G) = n / S(G)`.
pub fn connectivity(g: &Graph) -> f64 {
    g.n() as f64 / surface_area(g)
}

/// `C_U(G) = n / S_U(G)`; undefined when `S_U(G) = 0`.
pub fn connectivity_effective(g: &Graph, u: &Potential) -> Result<f64> {
    let s = effective_surface_area(g, u)?;
    if s == 0.0 {
        return Err(Error::UndefinedConnectivity);
    }
    Ok(g.n() as f64 / s)
}

/// `n^2 / vol(V)`, a lower bound for `S(G)` by Cauchy–Schwarz with equality
/// exactly when all degrees coincide.
pub fn cauchy_schwarz_floor(g: &Graph) -> f64 {
    let n = g.n() as f64;
    n * n / g.total_volume()
}

/// Split of `S_U` into the contribution of low-degree vertices and the rest.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalityEstimate {
    /// `S_U(G)`.
    pub exact: f64,
    /// `sum_{j : deg(j) < threshold} sigma_j / deg(j)`.
    pub low_degree_part: f64,
    /// `|exact - low_degree_part|`.
    pub error: f64,
    /// `max sigma * sum_{j : deg(j) >= threshold} 1 / deg(j)`.
    pub bound: f64,
}

/// Approximates `S_U` from the vertices with degree below `threshold` and
/// bounds the error by the high-degree reciprocal sum.
pub fn potential_locality(g: &Graph, u: &Potential, threshold: f64) -> Result<LocalityEstimate> {
    u.check(g)?;
    let exact = effective_surface_area(g, u)?;
    let mut low = 0.0;
    let mut high_reciprocal = 0.0;
    for (&d, &s) in g.degrees().iter().zip(u.values()) {
        if d < threshold {
            low += s / d;
        } else {
            high_reciprocal += 1.0 / d;
        }
    }
    let max_sigma = u.values().iter().copied().fold(0.0, f64::max);
    Ok(LocalityEstimate {
        exact,
        low_degree_part: low,
        error: math::abs(exact - low),
        bound: max_sigma * high_reciprocal,
    })
}

/// Verdict for a finite prefix of a graph sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum SequenceClass {
    Social,
    NotSocial,
    Inconclusive,
}

/// Thresholds of the social-sequence test.
///
/// The ratios `S/n` are fitted on a log-log scale, separately over the first
/// and the second half of the sample (the halves share the middle point).
/// A sequence is `Social` when the tail slope is at most `social_slope`, the
/// last ratio is below the first, and the tail slope keeps at least
/// `persistence` of the head slope. It is `NotSocial` when the tail slope is
/// at least `flat_slope`, or when the slope collapses below `persistence`
/// of a negative head slope (the ratio levels off at a positive limit).
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SocialRule {
    pub social_slope: f64,
    pub flat_slope: f64,
    pub persistence: f64,
}

impl Default for SocialRule {
    fn default() -> Self {
        Self {
            social_slope: -0.05,
            flat_slope: -0.005,
            persistence: 0.5,
        }
    }
}

impl SocialRule {
    pub fn classify(&self, ratios: &[f64], head_slope: f64, tail_slope: f64) -> SequenceClass {
        let (first, last) = match (ratios.first(), ratios.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return SequenceClass::Inconclusive,
        };
        let collapsing = head_slope < 0.0 && tail_slope > self.persistence * head_slope;
        if tail_slope >= self.flat_slope || collapsing {
            SequenceClass::NotSocial
        } else if tail_slope <= self.social_slope && last < first {
            SequenceClass::Social
        } else {
            SequenceClass::Inconclusive
        }
    }
}

/// Ratios `S(G_k) / n_k` along a sequence and their classification.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SequenceProfile {
    pub sizes: Vec<usize>,
    pub ratios: Vec<f64>,
    /// Least-squares slope of `ln(ratio)` against `ln(n)` over all members.
    pub loglog_slope: f64,
    pub head_slope: f64,
    pub tail_slope: f64,
    pub classification: SequenceClass,
    pub rule: SocialRule,
}

pub const MIN_SEQUENCE_LEN: usize = 4;

impl SequenceProfile {
    /// Builds the profile from `(n_k, S(G_k))` pairs.
    pub fn from_members(members: &[(usize, f64)], rule: SocialRule) -> Result<Self> {
        if members.len() < MIN_SEQUENCE_LEN {
            return Err(Error::SequenceTooShort {
                needed: MIN_SEQUENCE_LEN,
                found: members.len(),
            });
        }
        if members.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::NotIncreasing);
        }
        let sizes: Vec<usize> = members.iter().map(|m| m.0).collect();
        let ratios: Vec<f64> = members.iter().map(|&(n, s)| s / n as f64).collect();
        let xs: Vec<f64> = sizes.iter().map(|&n| math::ln(n as f64)).collect();
        let ys: Vec<f64> = ratios.iter().map(|&r| math::ln(r)).collect();
        let mid = members.len() / 2;
        let loglog_slope = lsq_slope(&xs, &ys);
        let head_slope = lsq_slope(&xs[..=mid], &ys[..=mid]);
        let tail_slope = lsq_slope(&xs[mid..], &ys[mid..]);
        let classification = rule.classify(&ratios, head_slope, tail_slope);
        Ok(Self {
            sizes,
            ratios,
            loglog_slope,
            head_slope,
            tail_slope,
            classification,
            rule,
        })
    }
}

/// Evaluates `S(G_k)/n_k` for each `k` and classifies the sequence.
pub fn analyze_sequence<F>(ks: &[usize], mut generate: F, rule: SocialRule) -> Result<SequenceProfile>
where
    F: FnMut(usize) -> Result<Graph>,
{
    let members = ks
        .iter()
        .map(|&k| generate(k).map(|g| (g.n(), surface_area(&g))))
        .collect::<Result<Vec<_>>>()?;
    SequenceProfile::from_members(&members, rule)
}

fn lsq_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
