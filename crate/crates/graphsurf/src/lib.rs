//! File formats, deterministic output and the `graphsurf` command line on
//! top of [`graphsurf_core`].

pub mod cli;
pub mod io;
pub mod json;
pub mod render;
pub mod runner;

pub use graphsurf_core as core;
