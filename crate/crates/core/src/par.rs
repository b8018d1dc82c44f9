//! Chunked map-reduce with a sequential fallback.
//!
//! Every reduction in this crate merges exact values with an associative and
//! commutative operation, so the parallel and sequential routes produce
//! identical results regardless of how the input is split.

#[cfg_attr(not(feature = "parallel"), allow(dead_code))]
const CHUNK: usize = 2048;

/// How term-level loops are executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled; otherwise
    /// identical to `Sequential`.
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

/// Folds `items` chunk by chunk into accumulators built by `init`, then merges them.
#[cfg_attr(not(feature = "parallel"), allow(unused_variables))]
pub(crate) fn fold_reduce<T, A, I, F, M>(
    items: &[T],
    strategy: Strategy,
    init: I,
    fold: F,
    merge: M,
) -> A
where
    T: Sync,
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &T) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel if items.len() > CHUNK => {
            use rayon::prelude::*;
            items
                .par_chunks(CHUNK)
                .map(|chunk| {
                    let mut acc = init();
                    for item in chunk {
                        fold(&mut acc, item);
                    }
                    acc
                })
                .reduce(&init, &merge)
        }
        _ => {
            let mut acc = init();
            for item in items {
                fold(&mut acc, item);
            }
            acc
        }
    }
}

/// Maps `f` over `0..n` preserving order.
pub(crate) fn map_range<R, F>(n: usize, strategy: Strategy, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}
