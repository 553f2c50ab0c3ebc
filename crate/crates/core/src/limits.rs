//! Process-wide size guards.
//!
//! Every enumeration in the crate is exhaustive, so each construction checks
//! its output against one of these caps before doing quadratic work.

use std::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_MAX_ORDER: usize = 2000;
pub const DEFAULT_AUT_CAP: usize = 512;
pub const DEFAULT_ORACLE_CAP: usize = 48;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);
static AUT_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_AUT_CAP);
static ORACLE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ORACLE_CAP);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group that may be fully enumerated.
    pub max_order: usize,
    /// Largest group whose automorphisms / isomorphisms are searched.
    pub aut_cap: usize,
    /// Largest group handed to the all-subgroups oracle.
    pub oracle_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            aut_cap: DEFAULT_AUT_CAP,
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

impl Limits {
    pub fn current() -> Self {
        Limits {
            max_order: MAX_ORDER.load(Ordering::Relaxed),
            aut_cap: AUT_CAP.load(Ordering::Relaxed),
            oracle_cap: ORACLE_CAP.load(Ordering::Relaxed),
        }
    }

    /// Installs `self` as the process-wide limits.
    pub fn install(self) {
        MAX_ORDER.store(self.max_order, Ordering::Relaxed);
        AUT_CAP.store(self.aut_cap, Ordering::Relaxed);
        ORACLE_CAP.store(self.oracle_cap, Ordering::Relaxed);
    }
}
