//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature, [`Parallelism::threads`] owns a rayon pool and
//! fans work out to it. Without the feature, or with one worker, everything
//! runs on the calling thread. Results always come back in input order, so
//! callers that merge them in that order are deterministic for any worker
//! count.

use std::fmt;
#[cfg(feature = "parallel")]
use std::sync::Arc;

/// Environment variable consulted by [`Parallelism::from_env`].
pub const THREADS_ENV: &str = "GSB_THREADS";

#[derive(Clone)]
pub struct Parallelism {
    workers: usize,
    #[cfg(feature = "parallel")]
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl fmt::Debug for Parallelism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Parallelism")
            .field("workers", &self.workers)
            .finish()
    }
}

impl Default for Parallelism {
    fn default() -> Self {
        Parallelism::sequential()
    }
}

impl Parallelism {
    pub fn sequential() -> Self {
        Parallelism {
            workers: 1,
            #[cfg(feature = "parallel")]
            pool: None,
        }
    }

    /// `n` workers; `0` means one per available core. Falls back to
    /// sequential when built without the `parallel` feature.
    pub fn threads(n: usize) -> Self {
        #[cfg(feature = "parallel")]
        {
            let n = if n == 0 {
                std::thread::available_parallelism().map_or(1, |p| p.get())
            } else {
                n
            };
            if n <= 1 {
                return Parallelism::sequential();
            }
            match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => Parallelism {
                    workers: n,
                    pool: Some(Arc::new(pool)),
                },
                Err(_) => Parallelism::sequential(),
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = n;
            Parallelism::sequential()
        }
    }

    /// Reads `GSB_THREADS`; unset or unparsable means sequential.
    pub fn from_env() -> Self {
        match std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            Some(n) => Parallelism::threads(n),
            None => Parallelism::sequential(),
        }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn is_parallel(&self) -> bool {
        self.workers > 1
    }

    /// `items.map(f)`, preserving order.
    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| items.par_iter().map(f).collect());
        }
        items.iter().map(f).collect()
    }

    /// `(0..n).map(f)`, preserving order.
    pub fn map_range<R, F>(&self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| (0..n).into_par_iter().map(f).collect());
        }
        (0..n).map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Parallelism::sequential().map(&items, |x| x * x);
        let par = Parallelism::threads(4).map(&items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(
            Parallelism::threads(3).map_range(10, |i| i + 1),
            (1..=10).collect::<Vec<_>>()
        );
    }

    #[test]
    fn one_worker_is_sequential() {
        assert!(!Parallelism::threads(1).is_parallel());
    }
}
