//! Seeded random instances. Every experiment derives per-instance seeds from
//! one master seed so runs are reproducible and order-independent.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distribution::Distribution;

pub const DEFAULT_SEED: u64 = 42;

pub fn instance_seed(master: u64, index: u64) -> u64 {
    master ^ index
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// I.i.d. uniform(0, 1) weights, normalized.
pub fn random_distribution(n: usize, seed: u64) -> Distribution {
    let mut rng = rng(seed);
    let weights: Vec<f64> = (0..n)
        .map(|_| loop {
            let w: f64 = rng.random();
            if w > 0.0 {
                break w;
            }
        })
        .collect();
    Distribution::from_weights(&weights).expect("positive weights normalize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        assert_eq!(random_distribution(6, 3), random_distribution(6, 3));
        assert_ne!(random_distribution(6, 3), random_distribution(6, 4));
        assert_eq!(instance_seed(42, 5), 47);
    }
}
