//! The generator PRNG, fixed so that seeds reproduce across implementations.
//!
//! State initialisation runs the seed through one SplitMix64 step:
//!
//! ```text
//! z = seed + 0x9E3779B97F4A7C15
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! state = z ^ (z >> 31)            (replaced by 0x9E3779B97F4A7C15 if zero)
//! ```
//!
//! Outputs come from xorshift64* (shifts 12, 25, 27; multiplier
//! `0x2545F4914F6CDD1D`), all arithmetic wrapping mod 2^64. A draw below `k`
//! is `(next * k) >> 64` computed in 128 bits.

#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        if z == 0 {
            z = 0x9E37_79B9_7F4A_7C15;
        }
        XorShift64Star { state: z }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform-ish draw in `0..k` (`k > 0`).
    pub fn below(&mut self, k: usize) -> usize {
        debug_assert!(k > 0);
        ((self.next_u64() as u128 * k as u128) >> 64) as usize
    }

    /// Fisher–Yates, walking down from the last index.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}
