//! Acceptance criteria 1-10. Each test prints one `criterion N: PASS|FAIL`
//! line and fails when the criterion is not met.

mod common;

use std::io::Write as _;
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use graphsurf::runner::RayonRunner;
use graphsurf_core::bounds::{self, PartitionStrategy};
use graphsurf_core::cheeger::{self, CutMethod};
use graphsurf_core::exact;
use graphsurf_core::generators::Family;
use graphsurf_core::metrics::{cauchy_schwarz_floor, surface_area};
use graphsurf_core::spectral::{build_operator, eigenvalues, trace_formula_check};
use graphsurf_core::surgery::{attach_pending_edge, cut_edge, glue_at_vertices};
use graphsurf_core::{Graph, Partition, Potential, VertexSet};
use rand::Rng;

fn verdict(criterion: u32, pass: bool, detail: &str) {
    let _ = writeln!(std::io::stderr(), "criterion {criterion}: {} {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn runner() -> RayonRunner {
    RayonRunner::from_env().expect("thread pool")
}

#[test]
fn criterion_01_trace_formula() {
    let start = Instant::now();
    let mut rng = rng(1);
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=50);
        let p = rng.gen_range(0.05..0.5);
        let g = random_connected(&mut rng, n, p, true, 0.1);
        let u = random_potential(&mut rng, n, 3.0);
        let t = trace_formula_check(&g, &u, 1e-9).unwrap();
        let e1 = rel_err(t.eigen_sum, t.predicted_sum);
        let e2 = rel_err(t.shift_sum, t.s_u);
        worst = worst.max(e1).max(e2);
        if e1 > 1e-9 || e2 > 1e-9 {
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        1,
        failures == 0 && elapsed <= Duration::from_secs(30),
        &format!("200 graphs, worst relative error {worst:.3e}, {failures} failures, {:.2}s", elapsed.as_secs_f64()),
    );
}

#[test]
fn criterion_02_complete_graphs() {
    let mut exact_ok = true;
    let mut worst: f64 = 0.0;
    for n in 2..=100usize {
        let g = Family::Complete(n).generate().unwrap();
        exact_ok &= exact::surface_area(&g) == exact::ratio(n as i64, n as i64 - 1);
        let s = eigenvalues(&g, &Potential::zero(n)).unwrap();
        let top = n as f64 / (n - 1) as f64;
        worst = worst.max(s.values[0].abs());
        for &l in &s.values[1..] {
            worst = worst.max((l - top).abs());
        }
    }
    verdict(2, exact_ok && worst <= 1e-10, &format!("S(K_n) exact: {exact_ok}, worst eigenvalue error {worst:.3e}"));
}

#[test]
fn criterion_03_star_path_example() {
    let mut closed_form_misses = Vec::new();
    let mut worst_gamma: f64 = 0.0;
    let mut gamma_misses = [0usize; 2];
    for m in 3..=40usize {
        for n in 1..=120usize {
            let g = Family::StarPath(m, n).generate().unwrap();
            let (mf, nf) = (m as f64, n as f64);
            let levels = bounds::degree_levels(&g);
            let delta = 1.0 + 1.0 / (mf + 1.0) + 0.5;
            let theta = 2.0 * mf + 3.0 + 2.0 / (mf + 1.0);
            let s = mf + 1.0 / (mf + 1.0) + (nf + 1.0) / 2.0;
            let ok = rel_err(levels.delta, delta) <= 1e-12
                && rel_err(bounds::theta(&g), theta) <= 1e-12
                && rel_err(surface_area(&g), s) <= 1e-12;
            if !ok {
                closed_form_misses.push((m, n));
            }
            let gap = bounds::gap_gamma(m, n).unwrap();
            let e = rel_err(gap.direct, gap.closed_form);
            worst_gamma = worst_gamma.max(e);
            if e > 1e-12 {
                gamma_misses[usize::from(n > 1)] += 1;
            }
        }
    }
    let positive_from_20: Vec<usize> =
        (20..=40).filter(|&m| !bounds::gap_gamma(m, 3 * m).unwrap().is_negative()).collect();
    let onset = (3..=200).find(|&m| (m..=200).all(|k| bounds::gap_gamma(k, 3 * k).unwrap().is_negative()));
    let only_n1 = closed_form_misses.iter().all(|&(_, n)| n == 1);
    let pass = closed_form_misses.is_empty() && worst_gamma <= 1e-12 && positive_from_20.is_empty();
    verdict(
        3,
        pass,
        &format!(
            "closed-form misses {} (all at n = 1: {only_n1}), gamma misses {} at n = 1 and {} at n > 1 \
             (worst relative error {worst_gamma:.3e}), \
             gamma(m,3m) >= 0 for m in {positive_from_20:?}, measured onset of negativity m = {onset:?}",
            closed_form_misses.len(),
            gamma_misses[0],
            gamma_misses[1],
        ),
    );
}

#[test]
fn criterion_04_planar_bound() {
    let start = Instant::now();
    let mut corpus: Vec<(String, Graph)> = Vec::new();
    let mut push = |f: Family| corpus.push((f.label(), f.generate().unwrap()));
    for k in 1..=49 {
        push(Family::Path(k));
    }
    for k in 3..=50 {
        push(Family::Cycle(k));
    }
    for p in 1..=7 {
        for q in 1..=7 {
            if p * q >= 2 {
                push(Family::Grid(p, q));
            }
        }
    }
    for k in 3..=29 {
        push(Family::Wheel(k));
    }
    for m in 1..=29 {
        push(Family::Star(m));
    }
    for m in 3..=15 {
        for n in 1..=30 {
            push(Family::StarPath(m, n));
        }
    }
    push(Family::Complete(4));
    let mut rng = rng(4);
    for _ in 0..100 {
        let n = rng.gen_range(2..=40);
        corpus.push((format!("tree({n})"), random_tree(&mut rng, n)));
    }
    let mut violations = Vec::new();
    for (name, g) in &corpus {
        let b = bounds::planar_lambda2_bound(g, true).unwrap();
        let lambda2 = eigenvalues(g, &Potential::zero(g.n())).unwrap().values[1];
        if !b.applicable || lambda2 > b.bound + 1e-9 {
            violations.push(name.clone());
        }
    }
    let elapsed = start.elapsed();
    verdict(
        4,
        violations.is_empty() && elapsed <= Duration::from_secs(60),
        &format!("{} planar graphs, violations {violations:?}, {:.2}s", corpus.len(), elapsed.as_secs_f64()),
    );
}

#[test]
fn criterion_05_cheeger() {
    let runner = runner();
    let mut rng = rng(5);
    let mut failures = 0;
    for _ in 0..500 {
        let n = rng.gen_range(2..=8);
        let p = rng.gen_range(0.0..0.8);
        let g = random_connected(&mut rng, n, p, false, 0.0);
        let h = cheeger::cheeger_exact_with(&g, 8, &runner).unwrap().ratio;
        let sweep = cheeger::cheeger_sweep(&g).unwrap().ratio;
        let lambda2 = eigenvalues(&g, &Potential::zero(n)).unwrap().values[1];
        let tol = 1e-12;
        if !(lambda2 / 2.0 <= h + tol && h <= sweep + tol && lambda2 <= 2.0 * h + tol) {
            failures += 1;
        }
    }
    let mut barbell_ok = true;
    for n in 3..=10usize {
        let g = Family::Barbell(n).generate().unwrap();
        let cut = cheeger::cheeger_exact_with(&g, 22, &runner).unwrap();
        let bound = 1.0 / (((n - 1) * (n - 1) + n) as f64);
        let witness = VertexSet::new(2 * n, 0..n).unwrap();
        let witness_ratio = cheeger::cut_ratio(&g, &witness).unwrap();
        barbell_ok &= cut.method == CutMethod::Exact
            && cut.ratio <= bound * (1.0 + 1e-12)
            && (witness_ratio - bound).abs() <= 1e-15
            && cut.cut_set == witness;
    }
    verdict(5, failures == 0 && barbell_ok, &format!("500 random graphs, {failures} chain failures; barbell n = 3..10 witness ok: {barbell_ok}"));
}

#[test]
fn criterion_06_lambda_n_lower_bound() {
    let runner = runner();
    let mut rng = rng(6);
    let mut failures = 0;
    let mut tightest = f64::INFINITY;
    for _ in 0..200 {
        let n = rng.gen_range(2..=14);
        let p = rng.gen_range(0.1..0.7);
        let g = random_connected(&mut rng, n, p, true, 0.1);
        let u = random_potential(&mut rng, n, 3.0);
        let r = bounds::lambda_n_lower_with(&g, &u, &PartitionStrategy::Exhaustive { max_n: 14 }, 1e-9, &runner).unwrap();
        tightest = tightest.min(r.lambda_n - r.bound);
        if r.bound > r.lambda_n + 1e-9 {
            failures += 1;
        }
    }
    let mut bipartite_ok = true;
    for d in 2..=6usize {
        let g = Family::BipartiteComplete(d).generate().unwrap();
        let r = bounds::lambda_n_lower_with(&g, &Potential::zero(2 * d), &PartitionStrategy::Exhaustive { max_n: 18 }, 1e-9, &runner).unwrap();
        let bipartition = Partition::from_side(VertexSet::new(2 * d, 0..d).unwrap()).unwrap();
        bipartite_ok &= (r.bound - 2.0).abs() <= 1e-10 && r.partition == bipartition && (r.lambda_n - 2.0).abs() <= 1e-10;
    }
    verdict(
        6,
        failures == 0 && bipartite_ok,
        &format!("200 random graphs, {failures} violations, smallest slack {tightest:.3e}; K_(d,d) optimal at the bipartition: {bipartite_ok}"),
    );
}

#[test]
fn criterion_07_jost_mulas() {
    let mut rng = rng(7);
    let mut failures = 0;
    for _ in 0..500 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.0..0.9);
        let g = random_connected(&mut rng, n, p, false, 0.0);
        let r = bounds::jost_mulas(&g, 1e-9).unwrap();
        let slack = 1e-9;
        let e = r.edges as f64;
        if !(r.s / e <= r.q + slack && r.q <= r.lambda_n + slack && r.lambda_n <= 0.54 * n as f64 * r.q + slack) {
            failures += 1;
        }
    }
    verdict(7, failures == 0, &format!("500 random graphs, {failures} violations of S/|E| <= Q <= lambda_n(0) <= 0.54 n Q"));
}

#[test]
fn criterion_08_surgery() {
    let mut rng = rng(8);
    let (mut glue_bad, mut cut_bad, mut pend_bad) = (0, 0, 0);
    for _ in 0..1000 {
        let (n1, n2) = (rng.gen_range(1..=10), rng.gen_range(1..=10));
        let (p1, p2) = (rng.gen_range(0.0..0.7), rng.gen_range(0.0..0.7));
        let g1 = random_connected(&mut rng, n1, p1, false, 0.0);
        let g2 = random_connected(&mut rng, n2, p2, false, 0.0);
        let (i1, i2) = (rng.gen_range(0..n1), rng.gen_range(0..n2));
        if !glue_at_vertices(&g1, &g2, i1, i2).unwrap().inequality_ok {
            glue_bad += 1;
        }
    }
    for _ in 0..1000 {
        let n = rng.gen_range(4..=10);
        let left = rng.gen_range(2..=n - 2);
        let p = rng.gen_range(0.0..0.7);
        let a = random_connected(&mut rng, left, p, false, 0.0);
        let b = random_connected(&mut rng, n - left, p, false, 0.0);
        let (i, j) = (rng.gen_range(0..left), left + rng.gen_range(0..n - left));
        let mut edges: Vec<(usize, usize, f64)> = a.edges().collect();
        edges.extend(b.edges().map(|(x, y, w)| (x + left, y + left, w)));
        edges.push((i, j, 1.0));
        let g = Graph::from_edges(n, edges).unwrap();
        if !cut_edge(&g, i, j).unwrap().inequality_ok {
            cut_bad += 1;
        }
    }
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.0..0.7);
        let g = random_connected(&mut rng, n, p, false, 0.0);
        if !attach_pending_edge(&g, rng.gen_range(0..n)).unwrap().inequality_ok {
            pend_bad += 1;
        }
    }
    verdict(
        8,
        glue_bad + cut_bad + pend_bad == 0,
        &format!("3 x 1000 applications checked in rational arithmetic; violations glue {glue_bad}, cut {cut_bad}, pend {pend_bad}"),
    );
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_graphsurf")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn classification(stdout: &[u8]) -> String {
    let v: serde_json::Value = serde_json::from_slice(stdout).expect("JSON output");
    v["classification"].as_str().unwrap_or_default().to_string()
}

#[test]
fn criterion_09_social_classification() {
    let complete = ["sequence", "--family", "complete", "--range", "4..64"];
    let path = ["sequence", "--family", "path", "--range", "4..64"];
    let (c1, complete_a) = cli(&complete);
    let (c2, complete_b) = cli(&complete);
    let (c3, path_a) = cli(&path);
    let (c4, path_b) = cli(&path);
    let analyze = ["analyze", "--family", "barbell", "--param", "5", "--potential-const", "0.5"];
    let (c5, report_a) = cli(&analyze);
    let (c6, report_b) = cli(&analyze);
    let codes_ok = [c1, c2, c3, c4, c5, c6].iter().all(|&c| c == 0);
    let complete_class = classification(&complete_a);
    let path_class = classification(&path_a);
    let identical = complete_a == complete_b && path_a == path_b && report_a == report_b;
    verdict(
        9,
        codes_ok && complete_class == "social" && path_class == "not_social" && identical,
        &format!("complete: {complete_class}, path: {path_class}, byte-identical reruns: {identical}"),
    );
}

#[test]
fn criterion_10_cauchy_schwarz_floor() {
    let mut graphs: Vec<Graph> = Vec::new();
    for k in 2..=30 {
        for f in [
            Family::Complete(k),
            Family::Barbell(k),
            Family::BipartiteComplete(k),
            Family::Path(k),
            Family::Cycle(k + 1),
            Family::Grid(k, 3),
            Family::Wheel(k + 1),
            Family::Star(k),
            Family::StarPath(k + 1, k),
        ] {
            graphs.push(f.generate().unwrap());
        }
    }
    let mut rng = rng(10);
    for _ in 0..300 {
        let n = rng.gen_range(1..=30);
        let weighted = rng.gen_bool(0.5);
        let p = rng.gen_range(0.0..0.6);
        graphs.push(random_connected(&mut rng, n, p, weighted, 0.1));
    }
    let mut below = 0;
    let mut equality_mismatch = 0;
    let mut regular = 0;
    for g in &graphs {
        let s = exact::surface_area(g);
        let floor = exact::cauchy_schwarz_floor(g);
        if floor > s || cauchy_schwarz_floor(g) > surface_area(g) * (1.0 + 1e-12) {
            below += 1;
        }
        let is_regular = exact::is_regular(g);
        regular += usize::from(is_regular);
        if (floor == s) != is_regular {
            equality_mismatch += 1;
        }
    }
    verdict(
        10,
        below == 0 && equality_mismatch == 0,
        &format!("{} graphs ({regular} regular), {below} floor violations, {equality_mismatch} equality mismatches", graphs.len()),
    );
}

#[test]
fn operator_residuals_certify_spectra() {
    let mut rng = rng(11);
    for _ in 0..20 {
        let n = rng.gen_range(2..=40);
        let g = random_connected(&mut rng, n, 0.3, true, 0.1);
        let u = random_potential(&mut rng, n, 3.0);
        let s = build_operator(&g, &u).unwrap().spectrum(1e-8).unwrap();
        assert!(s.max_residual() <= 1e-8);
    }
}
