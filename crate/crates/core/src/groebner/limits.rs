//! Cooperative time limits for long Gröbner computations.
//!
//! A deadline is installed per thread; the Buchberger loop polls it and
//! abandons the whole computation with [`Error::Timeout`] once it passes.

use std::cell::Cell;
use std::time::Instant;

use crate::error::{Error, Result};

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

/// Runs `f` with `deadline` installed on the current thread, restoring the previous one after.
pub fn with_deadline<T>(deadline: Option<Instant>, f: impl FnOnce() -> T) -> T {
    let prev = DEADLINE.with(|d| d.replace(deadline));
    let out = f();
    DEADLINE.with(|d| d.set(prev));
    out
}

pub fn current_deadline() -> Option<Instant> {
    DEADLINE.with(|d| d.get())
}

pub fn check() -> Result<()> {
    match current_deadline() {
        Some(t) if Instant::now() >= t => Err(Error::Timeout),
        _ => Ok(()),
    }
}
