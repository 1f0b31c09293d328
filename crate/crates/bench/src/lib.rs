//! Seeded inputs shared by the benchmarks.

use interlace_core::verify::enumerate::{random_graph, random_word};
use interlace_core::{DoubleOccurrenceWord, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

/// `count` random graphs of order `n`, edge probability 1/2.
pub fn graphs(n: usize, count: usize) -> Vec<Graph> {
    let mut r = rng(n as u64);
    (0..count).map(|_| random_graph(n, &mut r)).collect()
}

pub fn words(symbols: usize, count: usize) -> Vec<DoubleOccurrenceWord> {
    let mut r = rng(0x100 + symbols as u64);
    (0..count).map(|_| random_word(symbols, &mut r)).collect()
}
