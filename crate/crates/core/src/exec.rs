//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature (the default) work items fan out over the
//! ambient rayon pool; order of results always matches input order, so output
//! bytes do not depend on the thread count. Building without the feature
//! swaps in a plain sequential loop with the same signature.

#[cfg(feature = "parallel")]
pub(crate) fn map_ordered<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_ordered<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}
