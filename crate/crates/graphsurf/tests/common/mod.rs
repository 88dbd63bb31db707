#![allow(dead_code)]

use graphsurf_core::{Graph, Potential};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Weight in `(0, 2]`.
pub fn weight(rng: &mut ChaCha8Rng) -> f64 {
    2.0 - rng.gen_range(0.0..2.0)
}

/// Random spanning tree plus every other pair with probability `p`; loops
/// with probability `loop_p` per vertex.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64, weighted: bool, loop_p: f64) -> Graph {
    let w = |rng: &mut ChaCha8Rng| if weighted { weight(rng) } else { 1.0 };
    let mut present = vec![false; n * n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        present[u * n + v] = true;
        edges.push((u, v, w(rng)));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !present[i * n + j] && rng.gen_bool(p) {
                edges.push((i, j, w(rng)));
            }
        }
        if loop_p > 0.0 && rng.gen_bool(loop_p) {
            edges.push((i, i, w(rng)));
        }
    }
    if n == 1 && edges.is_empty() {
        edges.push((0, 0, w(rng)));
    }
    Graph::from_edges(n, edges).expect("valid random graph")
}

pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    random_connected(rng, n, 0.0, false, 0.0)
}

pub fn random_potential(rng: &mut ChaCha8Rng, n: usize, max: f64) -> Potential {
    Potential::new((0..n).map(|_| rng.gen_range(0.0..=max)).collect()).unwrap()
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
