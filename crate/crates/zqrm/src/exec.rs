//! Index-range fold kernel shared by the enumerations.
//!
//! With the `parallel` feature the range is split across the rayon pool; the
//! merge operations used here are associative and commutative, so results are
//! identical to the sequential fallback.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many indices a parallel split costs more than it saves.
#[cfg(feature = "parallel")]
pub(crate) const PAR_THRESHOLD: u64 = 1 << 14;

pub(crate) fn fold_reduce<T, ID, F, M>(total: u64, identity: ID, fold: F, merge: M) -> T
where
    T: Send,
    ID: Fn() -> T + Sync + Send,
    F: Fn(T, u64) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if total >= PAR_THRESHOLD {
            return (0..total)
                .into_par_iter()
                .fold(&identity, &fold)
                .reduce(&identity, &merge);
        }
    }
    let _ = &merge;
    fold_reduce_seq(total, identity, fold)
}

pub(crate) fn fold_reduce_seq<T, ID, F>(total: u64, identity: ID, fold: F) -> T
where
    ID: Fn() -> T,
    F: Fn(T, u64) -> T,
{
    (0..total).fold(identity(), fold)
}

/// Map the index range and collect in index order.
pub(crate) fn map_collect<T, F>(total: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if total >= PAR_THRESHOLD {
            return (0..total).into_par_iter().map(f).collect();
        }
    }
    map_collect_seq(total, f)
}

pub(crate) fn map_collect_seq<T, F>(total: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (0..total).map(f).collect()
}
