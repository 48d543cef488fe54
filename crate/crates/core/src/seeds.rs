//! Seed derivation for deterministic, parallelism-independent experiments.
//!
//! Every unit of work (scenario, solver restart, Monte Carlo user stream)
//! gets its own seed derived from a master seed and a stable index, so the
//! result is identical whether units run sequentially or in parallel.

/// SplitMix64 finalizer.
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive a child seed from a parent seed and an index.
pub fn mix(parent: u64, index: u64) -> u64 {
    splitmix64(parent.wrapping_add(splitmix64(index)))
}
