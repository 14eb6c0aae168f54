//! Feature-switched iteration helpers. With `parallel` these fan out on
//! rayon; otherwise they are plain loops with identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// True iff `pred(i)` holds for every `i in 0..n`.
#[cfg(feature = "parallel")]
pub fn all_indices<P>(n: usize, pred: P) -> bool
where
    P: Fn(usize) -> bool + Sync + Send,
{
    (0..n).into_par_iter().all(pred)
}

#[cfg(not(feature = "parallel"))]
pub fn all_indices<P>(n: usize, pred: P) -> bool
where
    P: Fn(usize) -> bool + Sync + Send,
{
    (0..n).all(pred)
}

/// First `Some` produced over `0..n`, taking the smallest index on ties so
/// the winner does not depend on scheduling.
#[cfg(feature = "parallel")]
pub fn find_map_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..n).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub fn find_map_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..n).find_map(f)
}
