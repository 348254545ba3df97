//! Data-parallel helpers. With the `parallel` feature (default) the batch
//! operations fan out over rayon; without it they run sequentially. The
//! `*_seq` variants are always sequential and exist for benchmarking the
//! two lanes against each other.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map_vec<T: Sync, U: Send, F: Sync + Send + Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_vec<T, U, F: Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
    items.iter().map(f).collect()
}

pub fn map_vec_seq<T, U, F: Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn all<T: Sync, F: Sync + Send + Fn(&T) -> bool>(items: &[T], f: F) -> bool {
    items.par_iter().all(f)
}

#[cfg(not(feature = "parallel"))]
pub fn all<T, F: Fn(&T) -> bool>(items: &[T], f: F) -> bool {
    items.iter().all(f)
}

pub fn all_seq<T, F: Fn(&T) -> bool>(items: &[T], f: F) -> bool {
    items.iter().all(f)
}
