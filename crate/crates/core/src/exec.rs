//! Execution policy and elementwise parallel primitives.
//!
//! Every kernel in the crate takes an [`ExecPolicy`] and must produce bitwise
//! identical results for `Seq` and `Par` at any worker count. The helpers
//! here only cover order-free elementwise maps; reductions with a fixed
//! evaluation order live in [`crate::solver`].

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Selects sequential or multi-threaded evaluation of a kernel.
///
/// `Par` owns a dedicated thread pool so the worker count is explicit and
/// reproducible instead of inherited from the global rayon pool.
#[derive(Clone)]
pub enum ExecPolicy {
    Seq,
    Par(Arc<rayon::ThreadPool>),
}

impl ExecPolicy {
    pub fn seq() -> Self {
        ExecPolicy::Seq
    }

    /// Build a parallel policy with a fixed number of worker threads.
    pub fn par(threads: usize) -> Result<Self> {
        if threads == 0 {
            return Err(Error::InvalidArgument(
                "parallel policy needs at least one thread".into(),
            ));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        Ok(ExecPolicy::Par(Arc::new(pool)))
    }

    pub fn is_parallel(&self) -> bool {
        matches!(self, ExecPolicy::Par(_))
    }

    pub fn threads(&self) -> usize {
        match self {
            ExecPolicy::Seq => 1,
            ExecPolicy::Par(pool) => pool.current_num_threads(),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ExecPolicy::Seq => "seq",
            ExecPolicy::Par(_) => "par",
        }
    }

    /// Run a closure inside this policy's pool (no-op for `Seq`).
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self {
            ExecPolicy::Seq => f(),
            ExecPolicy::Par(pool) => pool.install(f),
        }
    }
}

impl fmt::Debug for ExecPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExecPolicy::Seq => write!(f, "Seq"),
            ExecPolicy::Par(pool) => write!(f, "Par({})", pool.current_num_threads()),
        }
    }
}

/// `out[i] = f(i)` for `i in 0..len`, order-preserving.
pub fn map_indexed<V, F>(policy: &ExecPolicy, len: usize, f: F) -> Vec<V>
where
    V: Send,
    F: Fn(usize) -> V + Sync + Send,
{
    match policy {
        ExecPolicy::Seq => (0..len).map(f).collect(),
        ExecPolicy::Par(pool) => pool.install(|| (0..len).into_par_iter().map(f).collect()),
    }
}

/// In-place elementwise update; each slot is written by exactly one task.
pub fn for_each_indexed<V, F>(policy: &ExecPolicy, out: &mut [V], f: F)
where
    V: Send,
    F: Fn(usize, &mut V) + Sync + Send,
{
    match policy {
        ExecPolicy::Seq => {
            for (i, v) in out.iter_mut().enumerate() {
                f(i, v);
            }
        }
        ExecPolicy::Par(pool) => pool.install(|| {
            out.par_iter_mut().enumerate().for_each(|(i, v)| f(i, v));
        }),
    }
}

/// Order-preserving elementwise combination of two equally long slices.
///
/// Lengths are checked by the callers, which own the error message.
pub fn zip_with<A, B, C, F>(policy: &ExecPolicy, a: &[A], b: &[B], f: F) -> Vec<C>
where
    A: Sync + Copy,
    B: Sync + Copy,
    C: Send,
    F: Fn(A, B) -> C + Sync + Send,
{
    debug_assert_eq!(a.len(), b.len());
    match policy {
        ExecPolicy::Seq => a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect(),
        ExecPolicy::Par(pool) => pool.install(|| {
            a.par_iter()
                .zip(b.par_iter())
                .map(|(&x, &y)| f(x, y))
                .collect()
        }),
    }
}

/// `true` iff `pred` holds for every element.
pub fn all<V, F>(policy: &ExecPolicy, v: &[V], pred: F) -> bool
where
    V: Sync,
    F: Fn(&V) -> bool + Sync + Send,
{
    match policy {
        ExecPolicy::Seq => v.iter().all(pred),
        ExecPolicy::Par(pool) => pool.install(|| v.par_iter().all(pred)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_map_matches_seq() {
        let seq = map_indexed(&ExecPolicy::seq(), 1000, |i| i * i);
        let par = map_indexed(&ExecPolicy::par(4).unwrap(), 1000, |i| i * i);
        assert_eq!(seq, par);
    }

    #[test]
    fn zero_threads_rejected() {
        assert!(ExecPolicy::par(0).is_err());
    }

    #[test]
    fn policy_metadata() {
        let p = ExecPolicy::par(3).unwrap();
        assert_eq!(p.threads(), 3);
        assert_eq!(p.label(), "par");
        assert_eq!(ExecPolicy::seq().threads(), 1);
        assert_eq!(ExecPolicy::seq().label(), "seq");
    }
}
