//! File formats, experiment drivers and the command line for
//! [`disksever_core`].

pub mod calibrate;
pub mod cli;
pub mod config;
pub mod error;
pub mod experiments;
pub mod io;
pub mod record;
pub mod svg;

pub use error::{HarnessError, Result};

/// Environment variable capping the worker threads of parallel drivers.
pub const THREADS_ENV: &str = "DISKSEVER_THREADS";

/// Runs `f` on a pool sized by [`THREADS_ENV`], or on the global pool when
/// the variable is unset.
pub fn with_thread_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(f());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| HarnessError::input(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| HarnessError::internal(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}
