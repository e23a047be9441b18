//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature (default) an [`Exec`] with more than one job
//! runs on a dedicated rayon pool; otherwise, or with `jobs == 1`, the same
//! closure runs in a plain loop. Results always come back in input order, so
//! callers see identical output for every worker count.

#[cfg(feature = "parallel")]
use std::sync::Arc;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone)]
pub struct Exec {
    jobs: usize,
    #[cfg(feature = "parallel")]
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl std::fmt::Debug for Exec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Exec").field("jobs", &self.jobs).finish()
    }
}

impl Default for Exec {
    fn default() -> Self {
        Exec::with_jobs(0)
    }
}

impl Exec {
    pub fn sequential() -> Self {
        Exec::with_jobs(1)
    }

    /// `jobs == 0` means one worker per available core.
    pub fn with_jobs(jobs: usize) -> Self {
        let jobs = if jobs == 0 { available_parallelism() } else { jobs };
        #[cfg(feature = "parallel")]
        {
            let pool = (jobs > 1)
                .then(|| {
                    rayon::ThreadPoolBuilder::new()
                        .num_threads(jobs)
                        .build()
                        .ok()
                        .map(Arc::new)
                })
                .flatten();
            Exec { jobs, pool }
        }
        #[cfg(not(feature = "parallel"))]
        {
            Exec { jobs }
        }
    }

    /// Worker count actually in use.
    pub fn jobs(&self) -> usize {
        #[cfg(feature = "parallel")]
        {
            if self.pool.is_some() {
                self.jobs
            } else {
                1
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            1
        }
    }

    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return pool.install(|| items.par_iter().map(&f).collect());
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<R, F>(&self, range: std::ops::Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return pool.install(|| range.into_par_iter().map(&f).collect());
        }
        range.map(f).collect()
    }
}

fn available_parallelism() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}
