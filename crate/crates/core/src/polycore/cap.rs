//! The global size cap and checked count arithmetic.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::error::{PolyError, Result};

pub const DEFAULT_CAP: u64 = 1_000_000;

/// Environment variable overriding the default cap.
pub const CAP_ENV: &str = "POLY_LDC_CAP";

static CAP: AtomicU64 = AtomicU64::new(0);
static ENV_CAP: OnceLock<u64> = OnceLock::new();

fn env_cap() -> u64 {
    *ENV_CAP.get_or_init(|| {
        std::env::var(CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .filter(|&c| c > 0)
            .unwrap_or(DEFAULT_CAP)
    })
}

/// The bound on positions or table entries any single construction may produce.
pub fn size_cap() -> u64 {
    match CAP.load(Ordering::Relaxed) {
        0 => env_cap(),
        c => c,
    }
}

/// Overrides the cap for the whole process. Zero restores the default.
pub fn set_size_cap(cap: u64) {
    CAP.store(cap, Ordering::Relaxed);
}

/// Fails with `SizeCap` when `needed` exceeds the cap.
pub fn check_cap(what: &str, needed: u128) -> Result<usize> {
    let cap = size_cap();
    if needed > cap as u128 {
        return Err(PolyError::SizeCap {
            what: what.to_string(),
            needed: needed.to_string(),
            cap,
        });
    }
    Ok(needed as usize)
}

pub(crate) fn overflow(what: &str) -> PolyError {
    PolyError::SizeCap {
        what: what.to_string(),
        needed: "more than 2^128".to_string(),
        cap: size_cap(),
    }
}

/// `base^exp` with the convention 0^0 = 1; `None` on overflow.
pub fn checked_pow(base: u128, exp: u128) -> Option<u128> {
    if exp == 0 || base == 1 {
        return Some(1);
    }
    if base == 0 {
        return Some(0);
    }
    let e = u32::try_from(exp).ok()?;
    base.checked_pow(e)
}

pub(crate) fn pow_or(what: &str, base: u128, exp: u128) -> Result<u128> {
    checked_pow(base, exp).ok_or_else(|| overflow(what))
}

pub(crate) fn mul_or(what: &str, a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or_else(|| overflow(what))
}

pub(crate) fn add_or(what: &str, a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or_else(|| overflow(what))
}
