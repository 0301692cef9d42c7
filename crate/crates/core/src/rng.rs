//! Deterministic counter-based random streams.
//!
//! Every random decision in the pipeline draws from a [`Stream`] keyed by
//! `(seed, purpose tag, index)`. A stream is a SplitMix64 generator whose
//! starting state is derived from the key, so the value sequence of one
//! stream never depends on how many draws another stream made. This is what
//! makes checkpoint/resume and parallel execution bit-identical to a
//! straight single-threaded run: the batch drawn at iteration `i` is a
//! function of `(seed, "batch", i)` and nothing else.
//!
//! SplitMix64 reference: Steele, Lea & Flood, "Fast splittable pseudorandom
//! number generators" (the `splitmix64` finalizer with golden-gamma
//! increment). The generator is 64-bit, platform-independent, and needs no
//! state beyond a single word.

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 finalizer: bijective avalanche mix of a 64-bit word.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// FNV-1a over a byte string; used to fold purpose tags into stream keys.
#[inline]
fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Derive a child seed from `(seed, tag, index)`. Used wherever a whole
/// sub-run (an SGS member, a parameter initialization) needs its own seed.
pub fn derive_seed(seed: u64, tag: &str, index: u64) -> u64 {
    mix64(mix64(seed ^ fnv1a64(tag.as_bytes())).wrapping_add(index.wrapping_mul(GOLDEN_GAMMA)))
}

/// A single deterministic random stream.
#[derive(Debug, Clone)]
pub struct Stream {
    state: u64,
}

impl Stream {
    pub fn new(seed: u64, tag: &str, index: u64) -> Self {
        Stream {
            state: derive_seed(seed, tag, index),
        }
    }

    pub fn from_state(state: u64) -> Self {
        Stream { state }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[0, n)` by 128-bit multiply-shift.
    #[inline]
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    /// Uniform in `[lo, hi)`.
    #[inline]
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Standard normal via Box-Muller. Two uniforms are consumed per draw;
    /// the second Box-Muller output is discarded so the stream state stays
    /// a pure function of the draw count.
    pub fn normal(&mut self) -> f64 {
        let u1 = loop {
            let u = self.next_f64();
            if u > 0.0 {
                break u;
            }
        };
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// Sample `m` distinct indices from `[0, n)` by partial Fisher-Yates,
    /// returned sorted ascending.
    pub fn sample_indices(&mut self, n: usize, m: usize) -> Vec<usize> {
        assert!(m <= n);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..m {
            let j = i + self.below((n - i) as u64) as usize;
            pool.swap(i, j);
        }
        let mut picked: Vec<usize> = pool[..m].to_vec();
        picked.sort_unstable();
        picked
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_keyed() {
        let mut a = Stream::new(7, "batch", 3);
        let mut b = Stream::new(7, "batch", 3);
        assert_eq!(a.next_u64(), b.next_u64());
        assert_eq!(a.next_u64(), b.next_u64());

        let mut c = Stream::new(7, "batch", 4);
        let mut d = Stream::new(7, "ic", 3);
        let mut a2 = Stream::new(7, "batch", 3);
        let first = a2.next_u64();
        assert_ne!(first, c.next_u64());
        assert_ne!(first, d.next_u64());
    }

    #[test]
    fn unit_interval_bounds() {
        let mut s = Stream::new(1, "t", 0);
        for _ in 0..10_000 {
            let x = s.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }

    #[test]
    fn below_is_roughly_uniform() {
        let mut s = Stream::new(42, "t", 0);
        let mut counts = [0u32; 8];
        for _ in 0..80_000 {
            counts[s.below(8) as usize] += 1;
        }
        for &c in &counts {
            assert!((9_600..10_400).contains(&(c as i64)), "count {c}");
        }
    }

    #[test]
    fn normal_moments() {
        let mut s = Stream::new(9, "n", 0);
        let n = 200_000;
        let (mut sum, mut sq) = (0.0, 0.0);
        for _ in 0..n {
            let x = s.normal();
            sum += x;
            sq += x * x;
        }
        let mean = sum / n as f64;
        let var = sq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");
    }

    #[test]
    fn sample_indices_distinct_sorted() {
        let mut s = Stream::new(3, "pick", 1);
        let picked = s.sample_indices(50, 12);
        assert_eq!(picked.len(), 12);
        assert!(picked.windows(2).all(|w| w[0] < w[1]));
        assert!(picked.iter().all(|&i| i < 50));
    }
}
