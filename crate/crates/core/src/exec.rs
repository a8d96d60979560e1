//! Serial / data-parallel dispatch.
//!
//! Work is expressed as a fold over chunks of an index range (or a map over a
//! slice). With the `parallel` feature and [`Exec::Parallel`] the chunks run on
//! the rayon pool; otherwise they run in order on the calling thread. Callers
//! supply an associative, commutative `combine`, so both paths return the same
//! value.

use std::ops::Range;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Serial,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work will actually be spread over the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Folds `f` over `0..total` split into chunks of `chunk` indices.
pub fn fold_chunks<A, F, C>(exec: Exec, total: u64, chunk: u64, identity: A, f: F, combine: C) -> A
where
    A: Send + Sync + Clone,
    F: Fn(Range<u64>) -> A + Send + Sync,
    C: Fn(A, A) -> A + Send + Sync,
{
    let chunk = chunk.max(1);
    let n_chunks = total.div_ceil(chunk);
    let range_of = |i: u64| (i * chunk)..((i + 1) * chunk).min(total);
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && n_chunks > 1 {
        use rayon::prelude::*;
        return (0..n_chunks)
            .into_par_iter()
            .map(|i| f(range_of(i)))
            .reduce(|| identity.clone(), &combine);
    }
    let _ = exec;
    (0..n_chunks).fold(identity, |acc, i| combine(acc, f(range_of(i))))
}

/// Maps `f` over `items`, preserving order.
pub fn map_slice<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serial_and_parallel_agree() {
        let sum = |r: Range<u64>| r.map(|i| i * i).sum::<u64>();
        let a = fold_chunks(Exec::Serial, 10_001, 97, 0, sum, |x, y| x + y);
        let b = fold_chunks(Exec::Parallel, 10_001, 97, 0, sum, |x, y| x + y);
        assert_eq!(a, b);
        assert_eq!(a, (0..10_001u64).map(|i| i * i).sum::<u64>());
    }

    #[test]
    fn empty_range_is_identity() {
        assert_eq!(fold_chunks(Exec::Parallel, 0, 8, 7u64, |_| 1, |x, y| x + y), 7);
    }

    #[test]
    fn map_preserves_order() {
        let v: Vec<u32> = (0..100).collect();
        assert_eq!(map_slice(Exec::Parallel, &v, |x| x * 2), map_slice(Exec::Serial, &v, |x| x * 2));
    }
}
