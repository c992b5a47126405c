//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (the default) these dispatch to rayon; without it
//! they run the same closures on the calling thread. Every helper returns results
//! in index order, so the output never depends on the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `(0..n).map(f).collect()`, possibly in parallel.
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Folds `0..n` into per-worker accumulators and merges them with `reduce`.
///
/// `reduce` must be associative and commutative for the result to be
/// independent of the split.
pub fn fold_range<A, ID, F, R>(n: usize, identity: ID, fold: F, reduce: R) -> A
where
    A: Send,
    ID: Fn() -> A + Sync + Send,
    F: Fn(A, usize) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .fold(&identity, &fold)
            .reduce(&identity, &reduce)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = &reduce;
        (0..n).fold(identity(), fold)
    }
}

/// Runs `f(chunk_index, chunk)` on each `chunk_len`-sized piece of `data`.
pub fn for_each_chunk_mut<T, F>(data: &mut [T], chunk_len: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        data.par_chunks_mut(chunk_len)
            .enumerate()
            .for_each(|(i, c)| f(i, c));
    }
    #[cfg(not(feature = "parallel"))]
    {
        data.chunks_mut(chunk_len)
            .enumerate()
            .for_each(|(i, c)| f(i, c));
    }
}

/// Applies `f` elementwise to three equal-length slices.
pub fn zip3_mut<T, F>(a: &mut [T], b: &mut [T], c: &mut [T], f: F)
where
    T: Send,
    F: Fn(&mut T, &mut T, &mut T) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        a.par_iter_mut()
            .zip(b.par_iter_mut())
            .zip(c.par_iter_mut())
            .with_min_len(1 << 12)
            .for_each(|((x, y), z)| f(x, y, z));
    }
    #[cfg(not(feature = "parallel"))]
    {
        for ((x, y), z) in a.iter_mut().zip(b.iter_mut()).zip(c.iter_mut()) {
            f(x, y, z);
        }
    }
}

/// Number of workers the helpers above will use.
pub fn current_num_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Runs `op` with at most `threads` workers (0 = library default).
///
/// Without the `parallel` feature this simply calls `op`.
pub fn with_threads<R: Send>(threads: usize, op: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        if threads == 0 {
            return op();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        op()
    }
}
