//! Deterministic seed derivation.
//!
//! Every source of randomness in a run is a ChaCha8 stream keyed purely by
//! `(master_seed, domain, indices)`, so any rollout, reset, or shuffle can be
//! reproduced from the run manifest alone, independent of worker count or
//! resume point.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream domains; keeps independent consumers off each other's streams.
#[derive(Clone, Copy, Debug)]
pub enum Domain {
    Rollout,
    Shuffle,
    Eval,
    PlanGoal,
}

impl Domain {
    fn tag(self) -> u64 {
        match self {
            Domain::Rollout => 0x01,
            Domain::Shuffle => 0x02,
            Domain::Eval => 0x03,
            Domain::PlanGoal => 0x04,
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive a sub-seed from the master seed, a domain tag, and two indices
/// (typically iteration and rollout/trial index).
pub fn derive_seed(master: u64, domain: Domain, a: u64, b: u64) -> u64 {
    let mut s = splitmix64(master ^ domain.tag().wrapping_mul(0xD6E8_FEB8_6659_FD93));
    s = splitmix64(s ^ a);
    splitmix64(s ^ b)
}

/// ChaCha8 stream for a derived seed.
pub fn stream(master: u64, domain: Domain, a: u64, b: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, domain, a, b))
}
