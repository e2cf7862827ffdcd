//! Named-stream seed splitting.
//!
//! All randomness in a command flows from one 64-bit root seed. Consumers
//! never share a raw RNG; instead each asks for a named stream (for example
//! `"worlds"` or `"init"`), optionally indexed. Adding a new consumer with a
//! new name never perturbs the draws of existing streams, which keeps
//! artifacts byte-identical across versions that only add features.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// A point in the seed tree. Cheap to copy; derive children freely.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedStream {
    state: u64,
}

impl SeedStream {
    /// Root of the tree for a command-level seed.
    pub fn root(seed: u64) -> Self {
        SeedStream {
            state: splitmix64(seed ^ 0x9e37_79b9_7f4a_7c15),
        }
    }

    /// Child stream identified by a static name.
    pub fn stream(&self, name: &str) -> Self {
        SeedStream {
            state: splitmix64(self.state ^ fnv1a64(name.as_bytes())),
        }
    }

    /// Child stream identified by an index (per-problem, per-epoch, ...).
    pub fn index(&self, i: u64) -> Self {
        SeedStream {
            state: splitmix64(self.state.wrapping_add(splitmix64(i))),
        }
    }

    /// The derived 64-bit seed value.
    pub fn seed(&self) -> u64 {
        self.state
    }

    /// Materialize an RNG for this stream.
    pub fn rng(&self) -> ChaCha12Rng {
        ChaCha12Rng::seed_from_u64(self.state)
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}
