//! Switch between rayon data-parallel and sequential execution.
//!
//! Enumerations fan out over independent branch prefixes, so they parallelize
//! with no coordination. With the `parallel` feature disabled everything runs
//! sequentially; results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every item and concatenates the results in item order.
pub(crate) fn flat_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Vec<U> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        let chunks: Vec<Vec<U>> = items.par_iter().map(f).collect();
        chunks.into_iter().flatten().collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().flat_map(f).collect()
    }
}

/// First `Some` produced by `f` in item order.
pub(crate) fn find_map_first<T, U, F>(items: &[T], f: F) -> Option<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().find_map(f)
    }
}
