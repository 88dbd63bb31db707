//! Exact rational recomputation of degree sums.
//!
//! Every finite `f64` is a dyadic rational, so converting the stored weights
//! loses nothing; the degrees and surface areas below are exact for the
//! graph as stored.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, ToPrimitive, Zero};

use crate::graph::Graph;

fn to_rational(x: f64) -> BigRational {
    // Graph weights are finite by construction.
    BigRational::from_f64(x).expect("finite weight")
}

/// Exact weighted degrees.
pub fn degrees(g: &Graph) -> Vec<BigRational> {
    let n = g.n();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|i| g.weight(i, j))
                .filter(|&w| w != 0.0)
                .fold(BigRational::zero(), |acc, w| acc + to_rational(w))
        })
        .collect()
}

/// Exact `S(G) = sum_j 1 / deg(j)`.
pub fn surface_area(g: &Graph) -> BigRational {
    degrees(g)
        .into_iter()
        .fold(BigRational::zero(), |acc, d| acc + d.recip())
}

/// Exact `n^2 / vol(V)`.
pub fn cauchy_schwarz_floor(g: &Graph) -> BigRational {
    let vol = degrees(g)
        .into_iter()
        .fold(BigRational::zero(), |acc, d| acc + d);
    let n = BigInt::from(g.n());
    BigRational::from_integer(&n * &n) / vol
}

/// `p / q` as a big rational.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `p / q` rounded once to the nearest `f64`.
pub fn ratio_to_f64(p: i128, q: i128) -> f64 {
    BigRational::new(BigInt::from(p), BigInt::from(q))
        .to_f64()
        .unwrap_or(f64::NAN)
}

/// `true` when every weighted degree is the same.
pub fn is_regular(g: &Graph) -> bool {
    let d = degrees(g);
    d.windows(2).all(|w| w[0] == w[1])
}
