//! Deterministic labeled random streams.
//!
//! Every stochastic draw site in this crate owns an independent stream keyed
//! by `(seed, label)`: the stream key is `SHA-256(seed_le || 0x00 || label)`
//! and the generator is ChaCha8. Streams with different labels never share
//! state, so adding a new draw site to the code never perturbs the values
//! produced by existing sites, and replays are byte-stable across platforms.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// The fixed generator used for every stochastic draw in this crate.
pub type StreamRng = ChaCha8Rng;

fn stream_key(seed: u64, label: &str) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update([0u8]);
    hasher.update(label.as_bytes());
    hasher.finalize().into()
}

/// Independent random stream for the draw site named `label`.
pub fn stream(seed: u64, label: &str) -> StreamRng {
    ChaCha8Rng::from_seed(stream_key(seed, label))
}

/// Derive a sub-seed for a nested component that manages its own streams.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    let key = stream_key(seed, label);
    u64::from_le_bytes(key[..8].try_into().expect("8 bytes"))
}

/// Bernoulli draw: true with probability `p`.
///
/// `p <= 0` never fires and `p >= 1` always fires, without consuming
/// different amounts of stream state.
pub fn bernoulli(rng: &mut StreamRng, p: f64) -> bool {
    rng.gen::<f64>() < p
}

/// Uniform draw from `0..n`. `n` must be at least 1.
pub fn uniform_index(rng: &mut StreamRng, n: u64) -> u64 {
    assert!(n >= 1, "uniform_index needs a non-empty range");
    rng.gen_range(0..n)
}

/// Exponential draw with the given mean, strictly positive.
pub fn exponential(rng: &mut StreamRng, mean: f64) -> f64 {
    assert!(mean > 0.0, "exponential mean must be positive");
    loop {
        let u: f64 = rng.gen();
        // 1 - u is in (0, 1]; a zero draw (probability 2^-53) is redrawn so
        // inter-event gaps are strictly positive.
        let gap = -mean * (1.0 - u).ln();
        if gap > 0.0 {
            return gap;
        }
    }
}
