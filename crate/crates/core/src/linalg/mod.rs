//! Dense complex linear algebra for small Hilbert spaces.

mod bipartite;
mod eigen;
mod matrix;
mod vector;

pub use bipartite::{
    check_split, partial_trace, partial_transpose, reduced_state, schmidt_decompose,
    schmidt_decompose_tol, SchmidtDecomposition, Side,
};
pub use eigen::{herm_eigensystem, herm_eigensystem_tol, psd_sqrt, psd_sqrt_tol, Spectrum};
pub use matrix::{hs_inner, hs_norm, ComplexMatrix};
pub use vector::{
    basis_vector, complete_orthonormal_basis, ensure_normalized, equal_up_to_phase, inner,
    kron_vec, norm, normalized, phase_distance, relative_phase, scale, StateVector,
};

/// Pauli matrices in the computational basis `|0⟩, |1⟩`.
pub mod pauli {
    use super::ComplexMatrix;
    use num_complex::Complex64;

    pub fn identity2() -> ComplexMatrix {
        ComplexMatrix::identity(2)
    }

    pub fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
    }

    pub fn sigma_y() -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(2);
        m[(0, 1)] = Complex64::new(0.0, -1.0);
        m[(1, 0)] = Complex64::new(0.0, 1.0);
        m
    }

    pub fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::from_real_diagonal(&[1.0, -1.0])
    }

    /// `[σ_x, σ_y, σ_z]`.
    pub fn sigmas() -> [ComplexMatrix; 3] {
        [sigma_x(), sigma_y(), sigma_z()]
    }

    /// `Σ_i σ_i ⊗ σ_i`.
    pub fn sigma_dot_sigma() -> ComplexMatrix {
        let s = sigmas();
        let mut acc = ComplexMatrix::zeros(4);
        for m in &s {
            acc = &acc + &m.kron(m);
        }
        acc
    }
}
