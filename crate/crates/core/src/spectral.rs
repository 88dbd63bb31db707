//! The normalized discrete Schrödinger operator
//! `H_U = I - D^{-1/2} (A - U) D^{-1/2}` and its spectrum.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{jacobi_eigen, tridiagonal_eigen, SymMatrix};
use crate::math::{abs, max, sqrt};
use crate::metrics::{effective_surface_area, Potential};

/// Default eigenpair residual tolerance, relative to `||H||_F`.
pub const EIGEN_TOL: f64 = 1e-8;
/// Default relative tolerance for identities and inequalities.
pub const IDENTITY_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct SchrodingerOperator<'a> {
    graph: &'a Graph,
    potential: &'a Potential,
    matrix: SymMatrix,
}

/// Builds `H_U` entrywise as `delta_ij - (a_ij - delta_ij sigma_i) / sqrt(deg(i) deg(j))`.
pub fn build_operator<'a>(g: &'a Graph, u: &'a Potential) -> Result<SchrodingerOperator<'a>> {
    u.check(g)?;
    let d = g.degrees();
    let sigma = u.values();
    let matrix = SymMatrix::from_fn(g.n(), |i, j| {
        if i == j {
            1.0 - (g.weight(i, i) - sigma[i]) / d[i]
        } else {
            -g.weight(i, j) / sqrt(d[i] * d[j])
        }
    });
    Ok(SchrodingerOperator { graph: g, potential: u, matrix })
}

/// Which dense eigensolver to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Solver {
    #[default]
    Tridiagonal,
    Jacobi,
}

impl<'a> SchrodingerOperator<'a> {
    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn potential(&self) -> &'a Potential {
        self.potential
    }

    fn check_len(&self, f: &[f64]) -> Result<()> {
        if f.len() != self.graph.n() {
            return Err(Error::VectorLength { expected: self.graph.n(), found: f.len() });
        }
        Ok(())
    }

    /// `<f, H_U f>` from the matrix.
    pub fn quadratic_form(&self, f: &[f64]) -> Result<f64> {
        self.check_len(f)?;
        Ok(self.matrix.mul_vec(f).iter().zip(f).map(|(a, b)| a * b).sum())
    }

    /// The same form written as
    /// `1/2 sum_ij a_ij (f_i/sqrt(d_i) - f_j/sqrt(d_j))^2 + sum_i sigma_i f_i^2 / d_i`.
    /// With degrees taken as plain column sums this agrees with
    /// [`Self::quadratic_form`] for graphs with loops as well.
    pub fn dirichlet_form(&self, f: &[f64]) -> Result<f64> {
        self.check_len(f)?;
        let g = self.graph;
        let d = g.degrees();
        let scaled: Vec<f64> = f.iter().zip(d).map(|(x, di)| x / sqrt(*di)).collect();
        let mut edge_part = 0.0;
        for i in 0..g.n() {
            for j in 0..g.n() {
                let a = g.weight(i, j);
                if a != 0.0 {
                    let diff = scaled[i] - scaled[j];
                    edge_part += a * diff * diff;
                }
            }
        }
        let potential_part: f64 = self
            .potential
            .values()
            .iter()
            .zip(f)
            .zip(d)
            .map(|((s, x), di)| s * x * x / di)
            .sum();
        Ok(0.5 * edge_part + potential_part)
    }

    /// Full spectrum with per-pair residual certificates.
    pub fn spectrum(&self, tol: f64) -> Result<Spectrum> {
        self.spectrum_with(tol, Solver::Tridiagonal)
    }

    pub fn spectrum_with(&self, tol: f64, solver: Solver) -> Result<Spectrum> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidTolerance(tol));
        }
        let eig = match solver {
            Solver::Tridiagonal => tridiagonal_eigen(&self.matrix)?,
            Solver::Jacobi => jacobi_eigen(&self.matrix)?,
        };
        let norm = self.matrix.frobenius_norm();
        let scale = if norm > 0.0 { norm } else { 1.0 };
        let residuals: Vec<f64> = eig
            .values
            .iter()
            .zip(&eig.vectors)
            .map(|(l, v)| self.matrix.residual(*l, v) / scale)
            .collect();
        let worst = residuals.iter().copied().fold(0.0, f64::max);
        if worst > tol {
            return Err(Error::Uncertified { max_residual: worst, tol });
        }
        Ok(Spectrum { values: eig.values, residuals, vectors: eig.vectors })
    }
}

/// Sorted eigenvalues `lambda_1 <= .. <= lambda_n` of `H_U`, residuals
/// `||H v - lambda v|| / ||H||_F`, and unit eigenvectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub residuals: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn lambda_min(&self) -> f64 {
        self.values[0]
    }

    pub fn lambda_max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// `lambda_2`, if there are at least two eigenvalues.
    pub fn lambda2(&self) -> Option<f64> {
        self.values.get(1).copied()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// Spectrum of `H_U` for `(g, u)` at the default residual tolerance.
pub fn eigenvalues(g: &Graph, u: &Potential) -> Result<Spectrum> {
    build_operator(g, u)?.spectrum(EIGEN_TOL)
}

/// Both trace identities and the matrix-trace cross-check.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TraceReport {
    /// `sum_j lambda_j(U)`.
    pub eigen_sum: f64,
    /// `n - sum_j a_jj / deg(j) + S_U(G)`.
    pub predicted_sum: f64,
    /// `sum_j (lambda_j(U) - lambda_j(0))`.
    pub shift_sum: f64,
    /// `S_U(G)`.
    pub s_u: f64,
    /// `tr(H_U)` read off the diagonal.
    pub matrix_trace: f64,
    pub sum_ok: bool,
    pub shift_ok: bool,
    pub matrix_trace_ok: bool,
    pub pass: bool,
}

fn close(lhs: f64, rhs: f64, tol: f64) -> bool {
    abs(lhs - rhs) <= tol * max(1.0, abs(lhs))
}

/// Checks `sum lambda_j(U) = n - sum a_jj/deg(j) + S_U` and
/// `sum (lambda_j(U) - lambda_j(0)) = S_U` to relative tolerance `tol`.
pub fn trace_formula_check(g: &Graph, u: &Potential, tol: f64) -> Result<TraceReport> {
    let zero = Potential::zero(g.n());
    let op = build_operator(g, u)?;
    let with_u = op.spectrum(EIGEN_TOL)?;
    let without_u = eigenvalues(g, &zero)?;
    trace_report(g, u, &op, &with_u, &without_u, tol)
}

pub(crate) fn trace_report(
    g: &Graph,
    u: &Potential,
    op: &SchrodingerOperator<'_>,
    with_u: &Spectrum,
    without_u: &Spectrum,
    tol: f64,
) -> Result<TraceReport> {
    let s_u = effective_surface_area(g, u)?;
    let loop_term: f64 = g
        .degrees()
        .iter()
        .enumerate()
        .map(|(j, d)| g.weight(j, j) / d)
        .sum();
    let eigen_sum = with_u.sum();
    let predicted_sum = g.n() as f64 - loop_term + s_u;
    let shift_sum: f64 = with_u
        .values
        .iter()
        .zip(&without_u.values)
        .map(|(a, b)| a - b)
        .sum();
    let matrix_trace = op.matrix().trace();
    let sum_ok = close(eigen_sum, predicted_sum, tol);
    let shift_ok = close(shift_sum, s_u, tol);
    let matrix_trace_ok = close(eigen_sum, matrix_trace, tol);
    Ok(TraceReport {
        eigen_sum,
        predicted_sum,
        shift_sum,
        s_u,
        matrix_trace,
        sum_ok,
        shift_ok,
        matrix_trace_ok,
        pass: sum_ok && shift_ok && matrix_trace_ok,
    })
}

/// Unit eigenvector of `lambda_2(0)`, orthogonal to `D^{1/2} 1`, with its
/// first clearly non-zero entry positive.
pub fn fiedler_vector(g: &Graph) -> Result<Vec<f64>> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter("Fiedler vector needs n >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spectrum = eigenvalues(g, &Potential::zero(g.n()))?;
    Ok(normalize_fiedler(g, spectrum.vectors[1].clone()))
}

pub(crate) fn normalize_fiedler(g: &Graph, mut v: Vec<f64>) -> Vec<f64> {
    let kernel: Vec<f64> = g.degrees().iter().map(|d| sqrt(*d)).collect();
    let kk: f64 = kernel.iter().map(|x| x * x).sum();
    let proj: f64 = v.iter().zip(&kernel).map(|(a, b)| a * b).sum::<f64>() / kk;
    for (x, k) in v.iter_mut().zip(&kernel) {
        *x -= proj * k;
    }
    let norm = sqrt(v.iter().map(|x| x * x).sum());
    for x in v.iter_mut() {
        *x /= norm;
    }
    let big = v.iter().map(|x| abs(*x)).fold(0.0, f64::max);
    if let Some(first) = v.iter().find(|x| abs(**x) > 1e-9 * big) {
        if *first < 0.0 {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Family;
    use alloc::vec;

    fn gen(f: Family) -> Graph {
        f.generate().unwrap()
    }

    fn mat(op: &SchrodingerOperator<'_>) -> Vec<f64> {
        op.matrix().as_slice().to_vec()
    }

    #[test]
    fn operator_entries() {
        let k2 = gen(Family::Complete(2));
        let zero = Potential::zero(2);
        assert_eq!(mat(&build_operator(&k2, &zero).unwrap()), vec![1.0, -1.0, -1.0, 1.0]);
        let u = Potential::new(vec![1.0, 0.0]).unwrap();
        assert_eq!(mat(&build_operator(&k2, &u).unwrap()), vec![2.0, -1.0, -1.0, 1.0]);
        let single_loop = Graph::from_edges(1, [(0, 0, 1.0)]).unwrap();
        let z1 = Potential::zero(1);
        assert_eq!(mat(&build_operator(&single_loop, &z1).unwrap()), vec![0.0]);
        assert!(build_operator(&k2, &Potential::zero(3)).is_err());
    }

    #[test]
    fn quadratic_form_examples() {
        let g = gen(Family::Wheel(6));
        let zero = Potential::zero(g.n());
        let op = build_operator(&g, &zero).unwrap();
        let kernel: Vec<f64> = g.degrees().iter().map(|d| d.sqrt()).collect();
        assert!(op.quadratic_form(&kernel).unwrap().abs() < 1e-12);

        let k2 = gen(Family::Complete(2));
        let z2 = Potential::zero(2);
        let op = build_operator(&k2, &z2).unwrap();
        assert!((op.quadratic_form(&[1.0, -1.0]).unwrap() - 4.0).abs() < 1e-15);
        assert!((op.dirichlet_form(&[1.0, -1.0]).unwrap() - 4.0).abs() < 1e-15);
        assert!(op.quadratic_form(&[1.0]).is_err());
    }

    #[test]
    fn forms_agree_with_loops() {
        let g = Graph::from_edges(3, [(0, 1, 1.5), (1, 2, 0.5), (0, 0, 2.0), (2, 2, 0.25)]).unwrap();
        let u = Potential::new(vec![0.3, 0.0, 1.2]).unwrap();
        let op = build_operator(&g, &u).unwrap();
        let f = [0.7, -1.1, 0.4];
        let a = op.quadratic_form(&f).unwrap();
        let b = op.dirichlet_form(&f).unwrap();
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn spectrum_examples() {
        let s = eigenvalues(&gen(Family::Complete(2)), &Potential::zero(2)).unwrap();
        assert!(s.values[0].abs() < 1e-14 && (s.values[1] - 2.0).abs() < 1e-14);

        for n in [3, 5, 10, 25] {
            let s = eigenvalues(&gen(Family::Complete(n)), &Potential::zero(n)).unwrap();
            assert!(s.values[0].abs() < 1e-12);
            for v in &s.values[1..] {
                assert!((v - n as f64 / (n - 1) as f64).abs() < 1e-12);
            }
        }

        let p3 = eigenvalues(&gen(Family::Path(2)), &Potential::zero(3)).unwrap();
        for (v, want) in p3.values.iter().zip([0.0, 1.0, 2.0]) {
            assert!((v - want).abs() < 1e-14);
        }
    }

    #[test]
    fn kernel_multiplicity_counts_components() {
        let g = Graph::from_unweighted_edges(7, [(0, 1), (1, 2), (3, 4), (5, 6), (4, 5)]).unwrap();
        let s = eigenvalues(&g, &Potential::zero(7)).unwrap();
        let zeros = s.values.iter().filter(|v| v.abs() < 1e-10).count();
        assert_eq!(zeros, g.components().len());
    }

    #[test]
    fn invalid_tolerance() {
        let g = gen(Family::Complete(3));
        let z = Potential::zero(3);
        let op = build_operator(&g, &z).unwrap();
        assert_eq!(op.spectrum(0.0), Err(Error::InvalidTolerance(0.0)));
    }

    #[test]
    fn jacobi_route_agrees() {
        let g = gen(Family::Grid(3, 4));
        let u = Potential::new((0..12).map(|i| (i % 3) as f64 * 0.5).collect()).unwrap();
        let op = build_operator(&g, &u).unwrap();
        let a = op.spectrum_with(EIGEN_TOL, Solver::Tridiagonal).unwrap();
        let b = op.spectrum_with(EIGEN_TOL, Solver::Jacobi).unwrap();
        for (x, y) in a.values.iter().zip(&b.values) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn trace_formula_examples() {
        let g = gen(Family::Cycle(6));
        let r = trace_formula_check(&g, &Potential::zero(6), IDENTITY_TOL).unwrap();
        assert!(r.pass);
        assert!((r.eigen_sum - 6.0).abs() < 1e-12 && r.predicted_sum == 6.0);

        let k3 = gen(Family::Complete(3));
        let ones = Potential::constant(3, 1.0).unwrap();
        let r = trace_formula_check(&k3, &ones, IDENTITY_TOL).unwrap();
        assert!(r.pass);
        assert!((r.eigen_sum - 4.5).abs() < 1e-12);
        assert!((r.shift_sum - 1.5).abs() < 1e-12);

        let single_loop = Graph::from_edges(1, [(0, 0, 1.0)]).unwrap();
        let r = trace_formula_check(&single_loop, &Potential::zero(1), IDENTITY_TOL).unwrap();
        assert!(r.pass);
        assert_eq!(r.eigen_sum, 0.0);
    }

    #[test]
    fn fiedler_examples() {
        let p3 = fiedler_vector(&gen(Family::Path(2))).unwrap();
        assert!(p3[0] * p3[2] < 0.0);
        assert!(p3[0] > 0.0);

        let k2 = fiedler_vector(&gen(Family::Complete(2))).unwrap();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert!((k2[0] - h).abs() < 1e-14 && (k2[1] + h).abs() < 1e-14);

        let g = gen(Family::BipartiteComplete(2));
        let v = fiedler_vector(&g).unwrap();
        let z = Potential::zero(4);
        let op = build_operator(&g, &z).unwrap();
        assert!(op.matrix().residual(1.0, &v) < 1e-12);
        let kernel_dot: f64 = v.iter().zip(g.degrees()).map(|(x, d)| x * d.sqrt()).sum();
        assert!(kernel_dot.abs() < 1e-12);

        let disconnected = Graph::from_unweighted_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(fiedler_vector(&disconnected), Err(Error::Disconnected));
    }
}
