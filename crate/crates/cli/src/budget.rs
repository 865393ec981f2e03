//! Cooperative time budgeting. Long enumerations poll a shared deadline
//! at a coarse stride; whatever has not finished when it passes is
//! reported unchecked rather than aborted mid-write.

use std::time::{Duration, Instant};

/// How many items an enumeration consumes between deadline polls.
const POLL_STRIDE: u64 = 4096;

#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    end: Instant,
}

impl Deadline {
    /// A deadline the given number of seconds from now; zero seconds is
    /// already expired, which turns every budgeted step into a no-op.
    pub fn after_seconds(seconds: u64) -> Self {
        Deadline {
            end: Instant::now() + Duration::from_secs(seconds),
        }
    }

    pub fn expired(&self) -> bool {
        Instant::now() >= self.end
    }
}

/// Counts an iterator to completion unless the deadline passes first;
/// `None` means the budget expired and the partial count was discarded.
pub fn count_within<I: IntoIterator>(items: I, deadline: &Deadline) -> Option<u64> {
    if deadline.expired() {
        return None;
    }
    let mut count = 0u64;
    for _ in items {
        count += 1;
        if count % POLL_STRIDE == 0 && deadline.expired() {
            return None;
        }
    }
    Some(count)
}
