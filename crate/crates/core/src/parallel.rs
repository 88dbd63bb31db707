//! Pluggable execution of independent chunks of work.
//!
//! Exhaustive enumerations split their search space into chunks and reduce
//! the per-chunk winners with an order-independent comparison, so any
//! runner yields identical results.

use alloc::vec::Vec;

pub trait ChunkRunner: Sync {
    /// Evaluates `job(0..chunks)` and returns the results in chunk order.
    fn run_chunks<T, F>(&self, chunks: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send;

    /// Number of chunks worth creating for this runner.
    fn parallelism(&self) -> usize {
        1
    }
}

/// Runs every chunk on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl ChunkRunner for Sequential {
    fn run_chunks<T, F>(&self, chunks: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        (0..chunks).map(job).collect()
    }
}

/// Half-open range of chunk `idx` when `total` items are split `chunks` ways.
pub(crate) fn chunk_range(total: u64, chunks: usize, idx: usize) -> (u64, u64) {
    let chunks = chunks.max(1) as u64;
    let idx = idx as u64;
    let base = total / chunks;
    let extra = total % chunks;
    let lo = idx * base + idx.min(extra);
    let hi = lo + base + u64::from(idx < extra);
    (lo, hi)
}
