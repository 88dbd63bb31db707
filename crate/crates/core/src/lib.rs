//! Surface-area invariants of finite graphs and the spectrum of the normalized
//! discrete Schrödinger operator `H_U = I - D^{-1/2}(A - U)D^{-1/2}`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of immutable inputs; IO, file formats and the command line live in
//! the `graphsurf` crate.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | weighted graph model, degrees, cuts, BFS helpers |
//! | [`generators`] | named graph families |
//! | [`metrics`] | surface area, connectivity measures, social-sequence analysis |
//! | [`exact`] | rational recomputation of surface areas |
//! | [`linalg`] | dense symmetric eigensolvers |
//! | [`spectral`] | the operator, its quadratic form, spectrum and trace identity |
//! | [`cheeger`] | exact and sweep Cheeger constants |
//! | [`surgery`] | gluing, bridge cutting, pendant attachment |
//! | [`bounds`] | Randić indices and the eigenvalue bounds |
//! | [`report`] | one-shot evaluation of everything above |
//!
//! Vertices are addressed by 0-based `usize` indices throughout.

#![cfg_attr(not(test), no_std)]
#![deny(rust_2018_idioms)]

extern crate alloc;

pub mod bounds;
pub mod cheeger;
mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod linalg;
mod math;
pub mod metrics;
pub mod parallel;
pub mod report;
pub mod spectral;
mod subsets;
pub mod surgery;

pub use error::{Error, Result};
pub use generators::Family;
pub use graph::{EulerCheck, Graph, Partition, VertexSet};
pub use metrics::Potential;
pub use parallel::{ChunkRunner, Sequential};
