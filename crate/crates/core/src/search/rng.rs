//! Reproducible random streams.
//!
//! Every random draw in the crate comes from ChaCha8 keyed by
//! `(seed, domain)`, with one 64-bit stream id per trial or attempt. A
//! trial's randomness therefore depends only on its index, which is what
//! lets batches run on any number of threads and still reproduce the
//! sequential result bit for bit.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Key separation between the different consumers of a user seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Domain {
    CatalystTrials = 0x6361_7461_6c79_7374,
    PairGeneration = 0x7061_6972_7367_656e,
    Properties = 0x7072_6f70_6572_7479,
}

#[derive(Debug, Clone)]
pub struct TrialStreams {
    key: [u8; 32],
}

impl TrialStreams {
    pub fn new(seed: u64, domain: Domain) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&(domain as u64).to_le_bytes());
        TrialStreams { key }
    }

    /// Independent generator for trial `index`.
    pub fn stream(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::from_seed(self.key);
        rng.set_stream(index);
        rng
    }
}

/// SplitMix64 finalizer; derives per-item seeds from a base seed.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
