//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use hopfideal_core::hopf::random_element;
use hopfideal_core::{GroupDatum, HopfElement};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 7;

/// `count` seeded random elements of `datum`.
pub fn random_elements(datum: &Arc<GroupDatum>, count: usize) -> Vec<HopfElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count)
        .map(|_| random_element(datum, &mut rng))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_reproducible() {
        let d = hopfideal_core::catalog::klein();
        assert_eq!(random_elements(&d, 3), random_elements(&d, 3));
    }
}
