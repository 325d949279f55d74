//! Restart-level parallelism. Restarts are independent tasks merged in a
//! fixed order, so results are identical for any thread count. The
//! `WITNESS_LAB_THREADS` environment variable caps the worker count; unset or
//! unparsable values fall back to the rayon default.

use std::sync::OnceLock;

static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();

fn pool() -> &'static Option<rayon::ThreadPool> {
    POOL.get_or_init(|| {
        let n = std::env::var("WITNESS_LAB_THREADS").ok().and_then(|s| s.parse::<usize>().ok())?;
        if n == 0 {
            return None;
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()
    })
}

/// Runs `f` inside the capped pool when one is configured.
pub(crate) fn install<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    match pool() {
        Some(p) => p.install(f),
        None => f(),
    }
}
