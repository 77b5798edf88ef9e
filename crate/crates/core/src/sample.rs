//! Seed-deterministic sampling sequences.
//!
//! All stochastic machinery in the crate runs off these sequences, so a
//! (seed, index) pair identifies a sample regardless of thread count or
//! platform. Low-discrepancy coverage comes from Weyl/Kronecker sequences
//! with the R1/R2 plastic constants; the seed only shifts the offsets.

/// SplitMix64 step, used to derive stream offsets from a seed.
pub fn splitmix64(state: &mut u64) {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
}

/// Finalized SplitMix64 output for the given state.
pub fn splitmix64_mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// A unit-interval value derived from (seed, stream, index) by hashing.
pub fn unit_hash(seed: u64, stream: u64, index: u64) -> f64 {
    let h = splitmix64_mix(
        seed.wrapping_mul(0x9e3779b97f4a7c15)
            .wrapping_add(stream.wrapping_mul(0xd1b54a32d192ed03))
            .wrapping_add(index.wrapping_add(1).wrapping_mul(0x2545f4914f6cdd1d)),
    );
    // 53 high bits -> [0, 1)
    (h >> 11) as f64 / 9007199254740992.0
}

const R1: f64 = 0.618_033_988_749_894_9; // 1/phi
const R2_X: f64 = 0.754_877_666_246_692_8; // 1/rho, rho^3 = rho + 1
const R2_Y: f64 = 0.569_840_290_998_053_2; // 1/rho^2

/// One-dimensional low-discrepancy sequence in [0, 1).
#[derive(Clone, Copy, Debug)]
pub struct Seq1 {
    offset: f64,
}

impl Seq1 {
    pub fn new(seed: u64, stream: u64) -> Self {
        Seq1 { offset: unit_hash(seed, stream, 0) }
    }

    pub fn get(&self, i: u64) -> f64 {
        (self.offset + i as f64 * R1).fract()
    }
}

/// Two-dimensional low-discrepancy sequence in [0, 1)^2 (R2 sequence).
#[derive(Clone, Copy, Debug)]
pub struct Seq2 {
    ox: f64,
    oy: f64,
}

impl Seq2 {
    pub fn new(seed: u64, stream: u64) -> Self {
        Seq2 {
            ox: unit_hash(seed, stream, 0),
            oy: unit_hash(seed, stream, 1),
        }
    }

    pub fn get(&self, i: u64) -> (f64, f64) {
        (
            (self.ox + i as f64 * R2_X).fract(),
            (self.oy + i as f64 * R2_Y).fract(),
        )
    }
}
