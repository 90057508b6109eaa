//! Index-ordered parallel map with a sequential fallback.
//!
//! With the `parallel` feature (default) work is spread over a rayon pool;
//! without it every [`Exec`] runs on the calling thread. Either way results come
//! back in index order, so reductions over them are independent of worker count.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exec {
    Sequential,
    /// `workers = None` uses the global pool.
    #[default]
    Parallel,
    Workers(usize),
}

impl Exec {
    pub fn from_workers(workers: Option<usize>) -> Exec {
        match workers {
            None | Some(0) => Exec::Parallel,
            Some(1) => Exec::Sequential,
            Some(w) => Exec::Workers(w),
        }
    }
}

/// `(0..count).map(f)` collected in index order.
pub fn map_indexed<T, F>(count: u64, exec: Exec, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match exec {
        Exec::Sequential => (0..count).map(f).collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(f).collect()
        }
        #[cfg(feature = "parallel")]
        Exec::Workers(w) => {
            use rayon::prelude::*;
            match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
                Ok(pool) => pool.install(|| (0..count).into_par_iter().map(&f).collect()),
                Err(e) => {
                    log::warn!("could not build a {w}-thread pool ({e}); running sequentially");
                    (0..count).map(f).collect()
                }
            }
        }
        #[cfg(not(feature = "parallel"))]
        Exec::Parallel | Exec::Workers(_) => (0..count).map(f).collect(),
    }
}

/// `items.iter().map(f)` collected in order.
pub fn map_slice<I, T, F>(items: &[I], exec: Exec, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    map_indexed(items.len() as u64, exec, |i| f(&items[i as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved_for_every_mode() {
        let expect: Vec<u64> = (0..1000).map(|i| i * i).collect();
        for exec in [Exec::Sequential, Exec::Parallel, Exec::Workers(3)] {
            assert_eq!(map_indexed(1000, exec, |i| i * i), expect);
        }
    }

    #[test]
    fn worker_mapping() {
        assert_eq!(Exec::from_workers(None), Exec::Parallel);
        assert_eq!(Exec::from_workers(Some(1)), Exec::Sequential);
        assert_eq!(Exec::from_workers(Some(4)), Exec::Workers(4));
    }
}
