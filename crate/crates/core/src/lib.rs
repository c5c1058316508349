//! Exact computations with finite-dimensional path algebras and their module
//! categories: syzygies, Ext, dominant and injective dimensions, and
//! verdict-producing checks on `Ω^n(mod-Λ)` and Co-Gorenstein behaviour.

pub mod algebra;
pub mod linalg;
pub mod homology;
pub mod invariants;
pub mod lab;
pub mod module;

use std::sync::OnceLock;

/// Seed used when no other is configured.
pub const DEFAULT_SEED: u64 = 0xC0609;

/// The process-wide seed: `SYZYGY_LAB_SEED` (decimal or `0x` hex) if set and
/// valid, otherwise [`DEFAULT_SEED`].
pub fn seed() -> u64 {
    static SEED: OnceLock<u64> = OnceLock::new();
    *SEED.get_or_init(|| std::env::var("SYZYGY_LAB_SEED").ok().and_then(|s| parse_seed(&s)).unwrap_or(DEFAULT_SEED))
}

pub fn parse_seed(s: &str) -> Option<u64> {
    let s = s.trim();
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16).ok(),
        None => s.parse().ok(),
    }
}
