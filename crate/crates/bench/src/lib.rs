//! Seeded inputs shared by the benchmarks.

use factorlab_core::linalg::StateVector;
use factorlab_core::random::{random_density, random_state_vector, seeded};
use factorlab_core::states::DensityMatrix;

/// `count` random density matrices on `d1 ⊗ d2`, reproducible from `seed`.
pub fn random_states(count: usize, split: (usize, usize), seed: u64) -> Vec<DensityMatrix> {
    let mut rng = seeded(seed);
    (0..count)
        .map(|_| {
            DensityMatrix::new(random_density(&mut rng, split.0 * split.1), split)
                .expect("random_density is a valid state")
        })
        .collect()
}

pub fn random_qudit(d: usize, seed: u64) -> StateVector {
    random_state_vector(&mut seeded(seed), d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_reproducible() {
        let a = random_states(3, (2, 2), 5);
        let b = random_states(3, (2, 2), 5);
        assert_eq!(a, b);
        assert_eq!(random_qudit(3, 1).len(), 3);
    }
}
