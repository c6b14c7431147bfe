//! Execution strategy for the data-parallel loops (enumeration sums and
//! exhaustive property sweeps).
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on the rayon
//! pool; without it every strategy runs sequentially. Reductions used by this
//! crate are commutative and associative, so results are bit-identical either
//! way, and [`Exec::find_first`] always reports the lowest-index witness.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Maps every item and folds the results with `reduce`.
    pub fn map_reduce<T, R, M, F, I>(self, items: &[T], identity: I, map: M, reduce: F) -> R
    where
        T: Sync,
        R: Send,
        M: Fn(&T) -> R + Sync + Send,
        F: Fn(R, R) -> R + Sync + Send,
        I: Fn() -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(map).reduce(identity, reduce),
            _ => items.iter().map(map).fold(identity(), reduce),
        }
    }

    /// Index of the first item (in slice order) satisfying `pred`.
    pub fn find_first<T, P>(self, items: &[T], pred: P) -> Option<usize>
    where
        T: Sync,
        P: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().position_first(pred),
            _ => items.iter().position(pred),
        }
    }

    /// Order-preserving map.
    pub fn map<T, R, M>(self, items: &[T], map: M) -> Vec<R>
    where
        T: Sync,
        R: Send,
        M: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(map).collect(),
            _ => items.iter().map(map).collect(),
        }
    }
}
