//! Exhaustive subset searches with a deterministic parallel reduction.

use rayon::prelude::*;

/// Best candidate produced by `eval` over `0..count`, where `better(a, b)`
/// is a strict total order. The result does not depend on scheduling.
pub(crate) fn best_over<T, F, B>(count: u64, eval: F, better: B) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
    B: Fn(&T, &T) -> bool + Sync + Send,
{
    (0..count)
        .into_par_iter()
        .filter_map(eval)
        .reduce_with(|a, b| if better(&b, &a) { b } else { a })
}
