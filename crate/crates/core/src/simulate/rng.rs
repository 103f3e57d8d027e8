//! Seeded random streams.
//!
//! Every run derives independent ChaCha20 streams from one 64-bit seed:
//! the key comes from `ChaCha20Rng::seed_from_u64(seed)` and each consumer
//! gets its own stream id, so adding draws to one consumer never shifts
//! another's sequence.

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

/// Inter-arrival times of compound Poisson jumps.
pub const STREAM_JUMP_TIMES: u64 = 0;
/// Compound Poisson jump sizes.
pub const STREAM_JUMP_SIZES: u64 = 1;
/// Gaussian increments of Brownian drivers.
pub const STREAM_GAUSSIAN: u64 = 2;
/// Draws of the stationary initial state.
pub const STREAM_INITIAL: u64 = 3;

pub fn stream(seed: u64, id: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

pub(crate) fn standard_normal_vector(rng: &mut impl Rng, n: usize) -> DVector<f64> {
    DVector::from_fn(n, |_, _| rng.sample(StandardNormal))
}
