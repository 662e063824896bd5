//! Seeded, portable random sampling.
//!
//! The generator is SplitMix64 (Steele/Lea/Flood 2014): a 64-bit counter-based
//! generator with a fixed avalanche finalizer. It is trivially reproducible
//! across platforms and compiler versions, which the report determinism
//! contract depends on. Each (seed, stream, sample) triple derives an
//! independent stream, so sweep samples can be evaluated in any order or in
//! parallel without changing the output.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix64(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z ^= z >> 27;
    z = z.wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    z
}

/// SplitMix64 state.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Derive the generator for one sample of one named stream.
    pub fn for_sample(seed: u64, stream: &str, sample: u64) -> Self {
        let tag = fnv1a(stream.as_bytes());
        let mixed = mix64(seed ^ mix64(tag)) ^ mix64(sample.wrapping_mul(GOLDEN).wrapping_add(tag));
        Self::new(mixed)
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix64(self.state)
    }

    /// Uniform in [0, 1) with 53 random bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn range_f64(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in [lo, hi], inclusive on both ends. Unbiased via
    /// rejection of the modulus overhang.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty integer range");
        let span = (hi - lo) as u64 + 1;
        if span == 0 {
            // full u64 span
            return self.next_u64() as i64;
        }
        let zone = u64::MAX - u64::MAX % span;
        loop {
            let v = self.next_u64();
            if v < zone {
                return lo + (v % span) as i64;
            }
        }
    }
}

/// FNV-1a over bytes, used to tag per-identity sample streams.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xCBF2_9CE4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}
