//! Scalar diagnostics of density matrices.

mod concurrence;
mod ppt;
mod separability;

pub use concurrence::{concurrence, concurrence_of_pure, spin_flip};
pub use ppt::{ppt_check, ppt_check_tol, PptClass, PptVerdict};
pub use separability::{
    abs_sep_2x2, abs_sep_2x2_margin, kz_ball_member, kz_ball_member_tol, kz_purity_bound,
    maxent_split_weight, split_bound_check, werner_split_weight,
};

use crate::error::{Error, Result};
use crate::linalg::{hs_norm, ComplexMatrix};
use crate::states::DensityMatrix;

/// `Tr ρ²`.
pub fn purity(rho: &DensityMatrix) -> f64 {
    // Tr ρ² = Σ |ρ_ij|² for Hermitian ρ
    rho.matrix().as_slice().iter().map(|z| z.norm_sqr()).sum()
}

/// `1 − Tr ρ²`.
pub fn mixedness(rho: &DensityMatrix) -> f64 {
    1.0 - purity(rho)
}

/// Von Neumann entropy `−Tr ρ ln ρ`.
pub fn vn_entropy(rho: &DensityMatrix) -> f64 {
    spectral_entropy(&rho.spectrum().values)
}

/// `−Σ p ln p` over a probability vector, with `0 ln 0 = 0`; tiny negative
/// rounding is ignored.
pub fn spectral_entropy(p: &[f64]) -> f64 {
    p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.ln())
        .sum()
}

/// Entropy of any Hermitian PSD matrix of unit trace, such as a reduced state.
pub fn matrix_entropy(m: &ComplexMatrix) -> Result<f64> {
    Ok(spectral_entropy(
        &crate::linalg::herm_eigensystem(m)?.values,
    ))
}

/// Hilbert-Schmidt distance `‖ρ − σ‖`.
pub fn hs_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: sigma.dim(),
        });
    }
    Ok(hs_norm(&(rho.matrix() - sigma.matrix())))
}

/// Hilbert-Schmidt measure of `rho_ent` evaluated at a supplied candidate
/// nearest separable state `rho0`. No minimization is performed.
pub fn hs_measure_to(rho_ent: &DensityMatrix, rho0: &DensityMatrix) -> Result<f64> {
    hs_distance(rho_ent, rho0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_state, ghz_traced, narnhofer, tracial, werner, BellState};
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn purity_examples() {
        assert!((purity(&tracial((2, 2)).unwrap()) - 0.25).abs() < 1e-15);
        for b in BellState::ALL {
            assert!((purity(&bell_state(b)) - 1.0).abs() < 1e-15);
        }
        assert!((purity(&narnhofer()) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn mixedness_examples() {
        assert!(mixedness(&bell_state(BellState::PhiPlus)).abs() < 1e-15);
        assert!((mixedness(&ghz_traced(PI / 4.0)) - 0.5).abs() < 1e-15);
        assert!((mixedness(&tracial((2, 2)).unwrap()) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn entropy_examples() {
        assert!(vn_entropy(&bell_state(BellState::PsiMinus)).abs() < 1e-12);
        let half = tracial((2, 1)).unwrap();
        assert!((vn_entropy(&half) - LN_2).abs() < 1e-14);
        let t: f64 = 0.3;
        let (s2, c2) = (t.sin().powi(2), t.cos().powi(2));
        let expected = -s2 * s2.ln() - c2 * c2.ln();
        assert!((vn_entropy(&ghz_traced(t)) - expected).abs() < 1e-13);
    }

    #[test]
    fn hs_distance_of_werner_to_tracial() {
        let t = tracial((2, 2)).unwrap();
        for a in [0.0, 0.2, 0.7, 1.0] {
            let d = hs_distance(&werner(a).unwrap(), &t).unwrap();
            assert!((d - a * 3f64.sqrt() / 2.0).abs() < 1e-14);
        }
        let w = werner(0.4).unwrap();
        assert_eq!(hs_distance(&w, &w).unwrap(), 0.0);
    }

    #[test]
    fn hs_measure_of_singlet_at_werner_third() {
        let m = hs_measure_to(
            &bell_state(BellState::PsiMinus),
            &werner(1.0 / 3.0).unwrap(),
        )
        .unwrap();
        assert!((m - 1.0 / 3f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn hs_distance_rejects_mismatch() {
        let a = tracial((2, 2)).unwrap();
        let b = tracial((3, 3)).unwrap();
        assert!(matches!(
            hs_distance(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
