//! Worker pool for per-graph work. Results always come back in input order.

pub struct Pool {
    #[cfg(feature = "parallel")]
    inner: rayon::ThreadPool,
}

impl Pool {
    /// `jobs = None` uses the available parallelism.
    pub fn new(jobs: Option<usize>) -> Result<Pool, String> {
        if jobs == Some(0) {
            return Err("--jobs must be at least 1".into());
        }
        #[cfg(feature = "parallel")]
        {
            let inner = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| format!("cannot start worker pool: {e}"))?;
            Ok(Pool { inner })
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = jobs;
            Ok(Pool {})
        }
    }

    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Send + Sync,
    {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            self.inner.install(|| items.par_iter().map(f).collect())
        }
        #[cfg(not(feature = "parallel"))]
        {
            items.iter().map(f).collect()
        }
    }

    /// Runs `f` inside the pool so nested data-parallel library calls use
    /// the same thread budget.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        #[cfg(feature = "parallel")]
        {
            self.inner.install(f)
        }
        #[cfg(not(feature = "parallel"))]
        {
            f()
        }
    }
}
