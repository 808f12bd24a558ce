//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper returns results in input order, so reports are identical
//! whichever mode produced them.

/// How independent cases are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Rayon thread pool when the `parallel` feature is enabled, otherwise
    /// the same as `Sequential`.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map_collect<T, R, F>(exec: Execution, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    let _ = exec;
    items.into_iter().map(f).collect()
}

/// Maps `f` over `0..=upper`, preserving order.
pub fn map_range<R, F>(exec: Execution, upper: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Send + Sync,
{
    map_collect(exec, (0..=upper).collect(), f)
}

/// Maps then folds with an associative `combine`; `identity` must be neutral.
pub fn map_reduce<T, R, F, I, C>(exec: Execution, items: Vec<T>, identity: I, f: F, combine: C) -> R
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
    I: Fn() -> R + Send + Sync,
    C: Fn(R, R) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).reduce(&identity, &combine);
    }
    let _ = exec;
    items.into_iter().map(f).fold(identity(), combine)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let seq = map_range(Execution::Sequential, 50, |n| n * n);
        let par = map_range(Execution::Parallel, 50, |n| n * n);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
        let total = map_reduce(
            Execution::Parallel,
            (1..=10u64).collect(),
            || 0,
            |x| x,
            |a, b| a + b,
        );
        assert_eq!(total, 55);
    }
}
