//! Data-parallel helpers.
//!
//! With the `parallel` feature (default) the [`Execution::Parallel`] strategy
//! runs on the rayon global pool. Without it every strategy runs sequentially.
//! Both strategies produce results in input order, so callers get identical
//! output regardless of which one ran.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

// Below this many items the rayon split overhead dominates.
const PAR_THRESHOLD: usize = 256;

impl Execution {
    #[cfg_attr(not(feature = "parallel"), allow(dead_code))]
    fn use_rayon(self, len: usize) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel && len >= PAR_THRESHOLD
    }

    /// Order-preserving map over a slice.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.use_rayon(items.len()) {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Order-preserving filter-map over a slice.
    pub fn filter_map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.use_rayon(items.len()) {
            return items.par_iter().filter_map(f).collect();
        }
        items.iter().filter_map(f).collect()
    }

    /// Order-preserving filter-map over `0..len`.
    pub fn filter_map_indices<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.use_rayon(len) {
            return (0..len).into_par_iter().filter_map(f).collect();
        }
        (0..len).filter_map(f).collect()
    }
}
