//! Node budgets for the exponential searches.
//!
//! Every backtracking or recursive search charges one unit per visited node.
//! Running out yields [`Error::BudgetExhausted`] instead of a truncated answer.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Environment variable that overrides [`Budget::DEFAULT_LIMIT`].
pub const BUDGET_ENV: &str = "CHROMROOT_BUDGET";

#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 200_000_000;

    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Reads `CHROMROOT_BUDGET`, falling back to the default limit when it
    /// is unset or unparsable.
    pub fn from_env() -> Self {
        let limit = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(Self::DEFAULT_LIMIT);
        Budget::new(limit)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Charges `n` nodes.
    pub fn charge(&self, n: u64) -> Result<()> {
        let before = self.used.fetch_add(n, Ordering::Relaxed);
        if before.saturating_add(n) > self.limit {
            Err(Error::BudgetExhausted(self.limit))
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn tick(&self) -> Result<()> {
        self.charge(1)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}
