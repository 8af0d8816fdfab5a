//! Fault injection used by mutation tests of the verification suites.
//!
//! Process-global; only flip it from a test binary that runs nothing else
//! concurrently.

use std::sync::atomic::{AtomicBool, Ordering};

static FLIP_COLUMN_SIGN: AtomicBool = AtomicBool::new(false);

/// Negates every sign returned by column straightening while set.
pub fn set_column_sign_flip(on: bool) {
    FLIP_COLUMN_SIGN.store(on, Ordering::SeqCst);
}

pub(crate) fn column_sign_flipped() -> bool {
    FLIP_COLUMN_SIGN.load(Ordering::Relaxed)
}
