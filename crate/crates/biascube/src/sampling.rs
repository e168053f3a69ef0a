//! Seeded randomness for the sampling estimators.
//!
//! Generator: ChaCha8, a counter-based stream cipher. A run is identified by
//! (seed, stream index): the seed keys the cipher and the stream index
//! selects its 64-bit stream field. Draws are therefore bit-reproducible
//! across platforms and runs, and estimators that split their budget into
//! fixed-size streams give results independent of scheduling order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Samples per stream used by mean estimators.
pub const SAMPLE_STREAM_LEN: u64 = 4096;

/// Permutations per stream used by the permutation-sampling estimator.
pub const PERMUTATION_STREAM_LEN: u64 = 1024;

/// RNG for one (seed, stream) pair.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// One p-biased point on n coordinates: coordinate i (bit i-1) is drawn in
/// increasing order of i, set when the next unit draw falls below p.
pub fn biased_point(rng: &mut ChaCha8Rng, n: usize, p: f64) -> u64 {
    let mut x = 0u64;
    for i in 0..n {
        if rng.random::<f64>() < p {
            x |= 1 << i;
        }
    }
    x
}

/// Uniform random permutation of 0..n by Fisher-Yates.
pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}
