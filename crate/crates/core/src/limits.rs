//! Resource guards shared by the exponential solvers.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Cooperative cancellation flag, cheap to clone across workers.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// Size limits and interruption sources for one computation.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest order for which toughness runs without branch-and-bound mode.
    pub toughness_max_n: usize,
    /// Allow toughness above `toughness_max_n`.
    pub toughness_branch_and_bound: bool,
    /// Largest order accepted by the backtracking cycle solvers.
    pub cycle_max_n: usize,
    pub deadline: Option<Instant>,
    pub cancel: Option<CancelToken>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            toughness_max_n: 24,
            toughness_branch_and_bound: false,
            cycle_max_n: 48,
            deadline: None,
            cancel: None,
        }
    }
}

impl Limits {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub fn with_cancel(mut self, token: CancelToken) -> Self {
        self.cancel = Some(token);
        self
    }

    pub(crate) fn meter(&self) -> Meter<'_> {
        Meter {
            limits: self,
            ticks: 0,
        }
    }

    pub(crate) fn check_now(&self) -> Result<()> {
        if let Some(token) = &self.cancel {
            if token.is_cancelled() {
                return Err(Error::Cancelled);
            }
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                return Err(Error::TimeLimit);
            }
        }
        Ok(())
    }
}

/// Counts backtrack steps and polls the limits every few thousand.
pub(crate) struct Meter<'a> {
    limits: &'a Limits,
    ticks: u32,
}

impl Meter<'_> {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 0xfff == 0 {
            self.limits.check_now()
        } else {
            Ok(())
        }
    }
}
