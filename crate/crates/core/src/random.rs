//! Seeded random matrices and states for tests, sweeps and benchmarks.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{complete_orthonormal_basis, normalized, ComplexMatrix, StateVector};

/// Deterministic generator used everywhere a seed is accepted.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-distributed unit vector.
pub fn random_state_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> StateVector {
    loop {
        let v: StateVector = (0..dim).map(|_| gaussian(rng)).collect();
        if let Ok(n) = normalized(&v) {
            return n;
        }
    }
}

/// Haar-distributed unitary from Gram-Schmidt on a complex Ginibre matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let columns: Vec<StateVector> = (0..dim)
        .map(|_| (0..dim).map(|_| gaussian(rng)).collect())
        .collect();
    let basis = complete_orthonormal_basis(&columns, dim);
    ComplexMatrix::from_fn(dim, |i, j| basis[j][i])
}

/// Full-rank density matrix `G G† / Tr(G G†)` from a Ginibre matrix.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(dim, |_, _| gaussian(rng));
    let m = g.matmul(&g.adjoint());
    let tr = m.trace().re;
    m.scale_real(1.0 / tr).hermitian_part()
}

/// Uniform point on the probability simplex, sorted descending.
pub fn random_spectrum<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<f64> {
    let mut w: Vec<f64> = (0..dim)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    let s: f64 = w.iter().sum();
    w.iter_mut().for_each(|x| *x /= s);
    w.sort_by(|a, b| b.total_cmp(a));
    w
}

/// `U diag(spectrum) U†` for a Haar-random `U`.
pub fn random_density_with_spectrum<R: Rng + ?Sized>(
    rng: &mut R,
    spectrum: &[f64],
) -> ComplexMatrix {
    let u = random_unitary(rng, spectrum.len());
    ComplexMatrix::from_real_diagonal(spectrum)
        .conjugate_by(&u)
        .hermitian_part()
}

/// Random real unit 3-vector.
pub fn random_unit3<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-8 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_is_unitary() {
        let mut rng = seeded(7);
        for d in [2, 3, 4, 9] {
            assert!(random_unitary(&mut rng, d).is_unitary(1e-12));
        }
    }

    #[test]
    fn density_is_valid() {
        let mut rng = seeded(8);
        let rho = random_density(&mut rng, 4);
        assert!((rho.trace().re - 1.0).abs() < 1e-13);
        assert!(rho.is_psd(1e-12));
    }

    #[test]
    fn same_seed_same_output() {
        let a = random_state_vector(&mut seeded(3), 5);
        let b = random_state_vector(&mut seeded(3), 5);
        assert_eq!(a, b);
    }

    #[test]
    fn spectrum_is_a_sorted_distribution() {
        let s = random_spectrum(&mut seeded(1), 9);
        assert!((s.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        assert!(s.windows(2).all(|w| w[0] >= w[1]));
    }
}
