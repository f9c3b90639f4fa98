//! Shared input builders for the criterion benchmarks.

use pytree_core::{Gamma2Word, Generator, Syllable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic batch of alternating words with the given syllable count.
pub fn sample_words(count: usize, syllables: usize, seed: u64) -> Vec<Gamma2Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let start_l: bool = rng.gen();
            let raw: Vec<Syllable> = (0..syllables)
                .map(|i| {
                    let gen = if (i % 2 == 0) == start_l {
                        Generator::L
                    } else {
                        Generator::U
                    };
                    let mut e = rng.gen_range(-5i64..=5);
                    if e == 0 {
                        e = 2;
                    }
                    Syllable::new(gen, e)
                })
                .collect();
            Gamma2Word::from_syllables(raw)
        })
        .collect()
}

/// Primes `p = 1 (mod 8)` below the bound, the descent benchmark corpus.
pub fn descent_primes(bound: u64) -> Vec<u64> {
    (17..bound)
        .step_by(8)
        .filter(|&p| pytree_core::is_prime(p))
        .collect()
}
