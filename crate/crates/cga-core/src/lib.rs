//! Chaotic generators, a Shannon-entropy instrument for point clouds, a
//! real-coded genetic algorithm and the experiment harness tying them
//! together. The harness seeds GA populations from nine different signal
//! sources, measures the entropy of every initial population and relates it
//! to optimization success over a fixed suite of benchmark functions.

// guards written as `!(x > 0.0)` are deliberate: they reject NaN along with
// the out-of-range values, which `x <= 0.0` would let through
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod benchmarks;
pub mod chaos;
pub mod entropy;
pub mod error;
pub mod ga;
pub mod harness;
pub mod stats;

pub use error::{Error, Result};

/// Axis-aligned search rectangle, one `(low, high)` pair per coordinate.
pub type Box2 = [(f64, f64); 2];

/// splitmix64 finalizer, used wherever a cheap one-way mix of integers into
/// seed material is needed.
pub(crate) fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One standard normal draw via Box-Muller. The first uniform is reflected
/// into (0, 1] so the logarithm never sees zero.
pub(crate) fn standard_normal<R: rand::Rng>(rng: &mut R) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}
