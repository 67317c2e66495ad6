//! Grid evaluation helper. The check grids are embarrassingly parallel,
//! so with the "parallel" feature (on by default) they run on the rayon
//! pool; without it they run on one thread. A sequential mode also exists
//! at runtime so the bench suite can compare both paths under identical
//! workloads.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Like [`map_collect`], but `sequential: true` forces one thread even
/// when the parallel feature is enabled. Output order always matches the
/// input order.
pub(crate) fn map_collect_mode<T, U, F>(items: Vec<T>, sequential: bool, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    if sequential {
        items.into_iter().map(f).collect()
    } else {
        map_collect(items, f)
    }
}
