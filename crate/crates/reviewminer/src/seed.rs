//! Seeded pseudo-randomness for reproducible runs.
//!
//! Everything stochastic in this crate (Gibbs initialization and sampling,
//! train/test shuffles, synthetic fixtures) draws from [`SplitMix64`] so a
//! run is bit-identical for a given seed on every platform. Per-stage seeds
//! are derived from the single configured seed with [`derive_seed`], so
//! independent stages (or grid cells of a sweep) never share a stream.

/// SplitMix64 generator (Steele, Lea & Flood's finalizer constants).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform f64 in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..bound`. `bound` must be nonzero.
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        // Bias is ~bound/2^64, irrelevant at corpus scale.
        (self.next_u64() % bound as u64) as usize
    }

    /// In-place Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

/// Derive a per-stage seed from the run seed, a stage tag, and up to two
/// grid coordinates. FNV-1a over the tag keeps distinct stages apart;
/// the SplitMix finalizer decorrelates nearby (seed, coordinate) inputs.
pub fn derive_seed(base: u64, tag: &str, a: u64, b: u64) -> u64 {
    const FNV_OFFSET: u64 = 0xCBF2_9CE4_8422_2325;
    const FNV_PRIME: u64 = 0x0000_0100_0000_01B3;
    let mut h = FNV_OFFSET;
    for byte in tag.as_bytes() {
        h ^= u64::from(*byte);
        h = h.wrapping_mul(FNV_PRIME);
    }
    let mut mix = SplitMix64::new(base ^ h);
    let s = mix.next_u64() ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut mix2 = SplitMix64::new(s ^ b.rotate_left(32));
    mix2.next_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn reference_values() {
        // First outputs for seed 0, from the published SplitMix64 reference.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn f64_in_unit_interval() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..1000 {
            let x = rng.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }

    #[test]
    fn derived_seeds_distinct_across_tags_and_coords() {
        let s1 = derive_seed(42, "sweep", 1, 5);
        let s2 = derive_seed(42, "sweep", 1, 6);
        let s3 = derive_seed(42, "sweep", 2, 5);
        let s4 = derive_seed(42, "split", 1, 5);
        assert_ne!(s1, s2);
        assert_ne!(s1, s3);
        assert_ne!(s1, s4);
        assert_eq!(s1, derive_seed(42, "sweep", 1, 5));
    }

    #[test]
    fn shuffle_is_a_permutation() {
        let mut rng = SplitMix64::new(3);
        let mut v: Vec<u32> = (0..50).collect();
        rng.shuffle(&mut v);
        let mut sorted = v.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..50).collect::<Vec<u32>>());
    }
}
