//! Cooperative resource limits for long eliminations.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Wall-clock and resident-memory limits, checked between units of work.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub deadline: Option<Instant>,
    pub max_rss_bytes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    /// A budget starting now.
    pub fn new(time: Duration, max_rss_bytes: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + time),
            max_rss_bytes: Some(max_rss_bytes),
        }
    }

    /// `Err(Guard)` once a limit is exceeded. Memory is read from
    /// `/proc/self/statm` and is not enforced where that file is missing.
    pub fn check(&self) -> Result<()> {
        if self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::Guard("time budget exceeded".into()));
        }
        if let (Some(cap), Some(rss)) = (self.max_rss_bytes, resident_bytes()) {
            if rss > cap {
                return Err(Error::Guard(format!(
                    "memory budget exceeded ({} MiB resident)",
                    rss >> 20
                )));
            }
        }
        Ok(())
    }
}

fn resident_bytes() -> Option<u64> {
    let statm = std::fs::read_to_string("/proc/self/statm").ok()?;
    let pages: u64 = statm.split_whitespace().nth(1)?.parse().ok()?;
    Some(pages * 4096)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expired_deadline_is_a_guard() {
        let b = Budget {
            deadline: Some(Instant::now() - Duration::from_secs(1)),
            max_rss_bytes: None,
        };
        assert!(matches!(b.check(), Err(Error::Guard(_))));
        assert!(Budget::unlimited().check().is_ok());
    }

    #[test]
    fn tiny_memory_cap_trips_on_linux() {
        let b = Budget {
            deadline: None,
            max_rss_bytes: Some(1),
        };
        if resident_bytes().is_some() {
            assert!(b.check().is_err());
        }
    }
}
