//! Cooperative time limits for long Gröbner and resolution computations.
//!
//! A deadline is installed per thread with [`with_deadline`]; the inner loops
//! of the kernel call [`check`] and bail out with [`Error::Timeout`] once it
//! has passed. Without an installed deadline `check` never fails.

use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

/// Runs `f` with a deadline `limit` from now on the current thread.
///
/// Nested calls keep the earlier of the two deadlines.
pub fn with_deadline<T>(limit: Option<Duration>, f: impl FnOnce() -> T) -> T {
    let Some(limit) = limit else {
        return f();
    };
    let new = Instant::now() + limit;
    let prev = DEADLINE.with(|d| d.get());
    let effective = match prev {
        Some(p) if p < new => p,
        _ => new,
    };
    DEADLINE.with(|d| d.set(Some(effective)));
    let out = f();
    DEADLINE.with(|d| d.set(prev));
    out
}

/// Runs `f` with no deadline on the current thread, restoring the previous one afterwards.
pub fn suspended<T>(f: impl FnOnce() -> T) -> T {
    let prev = DEADLINE.with(|d| d.replace(None));
    let out = f();
    DEADLINE.with(|d| d.set(prev));
    out
}

/// Fails once the current thread's deadline has passed.
#[inline]
pub fn check() -> Result<()> {
    match DEADLINE.with(|d| d.get()) {
        Some(deadline) if Instant::now() >= deadline => Err(Error::Timeout),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_deadline_never_times_out() {
        assert!(check().is_ok());
    }

    #[test]
    fn expired_deadline_reports_timeout() {
        let r = with_deadline(Some(Duration::from_nanos(1)), || {
            std::thread::sleep(Duration::from_millis(2));
            check()
        });
        assert_eq!(r, Err(Error::Timeout));
        assert!(check().is_ok());
        let r = with_deadline(Some(Duration::from_nanos(1)), || {
            std::thread::sleep(Duration::from_millis(2));
            (suspended(check), check())
        });
        assert_eq!(r, (Ok(()), Err(Error::Timeout)));
    }
}
