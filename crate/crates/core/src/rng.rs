//! Reproducible random streams.
//!
//! Every stream is a ChaCha8 generator (`rand_chacha`) seeded through
//! `SeedableRng::seed_from_u64` with a 64-bit value derived from the run's
//! `rng_seed` and a textual label. Labels are hashed with 64-bit FNV-1a and
//! mixed with SplitMix64, so a given `(rng_seed, label)` pair produces the
//! same stream on every platform. Sampling without replacement is a partial
//! Fisher-Yates shuffle driven by `random_range` over `u64`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Independent stream for `(rng_seed, label)`.
pub fn stream(rng_seed: u64, label: &str) -> StreamRng {
    ChaCha8Rng::seed_from_u64(splitmix64(rng_seed ^ fnv1a(label.as_bytes())))
}

/// Uniform sample of `min(k, pool.len())` distinct elements, in draw order.
pub fn sample_without_replacement<T: Clone, R: Rng + ?Sized>(
    pool: &[T],
    k: usize,
    rng: &mut R,
) -> Vec<T> {
    let n = pool.len();
    let k = k.min(n);
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.random_range(i as u64..n as u64) as usize;
        idx.swap(i, j);
    }
    idx[..k].iter().map(|&i| pool[i].clone()).collect()
}
