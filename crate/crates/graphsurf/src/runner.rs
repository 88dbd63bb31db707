//! Rayon-backed [`ChunkRunner`] sized by `GRAPHSURF_THREADS`.

use graphsurf_core::ChunkRunner;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

pub const THREADS_ENV: &str = "GRAPHSURF_THREADS";

pub struct RayonRunner {
    pool: ThreadPool,
}

impl RayonRunner {
    /// `threads = None` uses one worker per available core.
    pub fn new(threads: Option<usize>) -> Result<Self, rayon::ThreadPoolBuildError> {
        let mut builder = ThreadPoolBuilder::new();
        if let Some(t) = threads {
            builder = builder.num_threads(t.max(1));
        }
        Ok(Self { pool: builder.build()? })
    }

    /// Reads the cap from `GRAPHSURF_THREADS`; an unset or empty variable
    /// means no cap.
    pub fn from_env() -> anyhow::Result<Self> {
        let threads = match std::env::var(THREADS_ENV) {
            Ok(v) if !v.trim().is_empty() => Some(parse_threads(&v)?),
            _ => None,
        };
        Ok(Self::new(threads)?)
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

fn parse_threads(v: &str) -> anyhow::Result<usize> {
    match v.trim().parse::<usize>() {
        Ok(t) if t >= 1 => Ok(t),
        _ => anyhow::bail!("{THREADS_ENV} must be a positive integer, found `{v}`"),
    }
}

impl ChunkRunner for RayonRunner {
    fn run_chunks<T, F>(&self, chunks: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        self.pool.install(|| (0..chunks).into_par_iter().map(job).collect())
    }

    fn parallelism(&self) -> usize {
        self.threads()
    }
}
