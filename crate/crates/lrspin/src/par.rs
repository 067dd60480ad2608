//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the maps below fan out over
//! rayon's global pool; without it they run sequentially with identical
//! results, since every reduction used here is order-independent or
//! re-sorted by the caller.

#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

pub fn map_sum<T, F>(items: Vec<T>, f: F) -> usize
where
    T: Send,
    F: Fn(T) -> usize + Sync + Send,
{
    map_collect(items, f).into_iter().sum()
}
