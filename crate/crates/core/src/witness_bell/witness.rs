use crate::error::{Error, Result};
use crate::linalg::{hs_inner, hs_norm, ComplexMatrix};
use crate::states::{check_maxent_projector, DensityMatrix};
use crate::DEFAULT_TOL;

/// Hermitian operator `A` with `Tr ρA ≥ 0` on every separable `ρ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    operator: ComplexMatrix,
    split: (usize, usize),
}

impl Witness {
    pub fn new(operator: ComplexMatrix, split: (usize, usize)) -> Result<Self> {
        crate::linalg::check_split(operator.dim(), split)?;
        let deviation = operator.hermiticity_deviation();
        if deviation > DEFAULT_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self {
            operator: operator.hermitian_part(),
            split,
        })
    }

    pub fn operator(&self) -> &ComplexMatrix {
        &self.operator
    }

    pub fn split(&self) -> (usize, usize) {
        self.split
    }

    /// `U A U†`, the same witness read in the factorization selected by `U`.
    pub fn conjugated(&self, u: &ComplexMatrix) -> Result<Self> {
        if u.dim() != self.operator.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.operator.dim(),
                found: u.dim(),
            });
        }
        Self::new(self.operator.conjugate_by(u), self.split)
    }
}

/// `A = 𝟙 − d P` for a projector `P` onto a maximally entangled vector.
/// Its expectation is nonnegative on every product vector and vanishes on some.
pub fn witness_projector(p: &ComplexMatrix, d: usize) -> Result<Witness> {
    check_maxent_projector(p, d)?;
    let a = &ComplexMatrix::identity(d * d) - &p.scale_real(d as f64);
    Witness::new(a, (d, d))
}

/// Tangent-plane witness at `rho0` pointing away from `rho_ent`:
/// `(ρ₀ − ρ_ent − ⟨ρ₀, ρ₀ − ρ_ent⟩ 𝟙) / ‖ρ₀ − ρ_ent‖`.
pub fn optimal_witness(rho0: &DensityMatrix, rho_ent: &DensityMatrix) -> Result<Witness> {
    if rho0.dim() != rho_ent.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho0.dim(),
            found: rho_ent.dim(),
        });
    }
    let diff = rho0.matrix() - rho_ent.matrix();
    let norm = hs_norm(&diff);
    if norm < DEFAULT_TOL {
        return Err(Error::ZeroDistance);
    }
    let offset = hs_inner(rho0.matrix(), &diff)?.re;
    let shifted = &diff - &ComplexMatrix::identity(diff.dim()).scale_real(offset);
    Witness::new(shifted.scale_real(1.0 / norm), rho0.split())
}

/// `Tr ρA`; negative values witness entanglement.
pub fn ewi_eval(rho: &DensityMatrix, a: &Witness) -> Result<f64> {
    Ok(hs_inner(rho.matrix(), a.operator())?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kron_vec, pauli};
    use crate::states::{bell_state, weyl_basis_state, werner, BellState};
    use num_complex::Complex64;

    #[test]
    fn werner_tangent_witness() {
        let rho0 = werner(1.0 / 3.0).unwrap();
        let singlet = bell_state(BellState::PsiMinus);
        let a = optimal_witness(&rho0, &singlet).unwrap();
        let expected = (&ComplexMatrix::identity(4) + &pauli::sigma_dot_sigma())
            .scale_real(1.0 / (2.0 * 3f64.sqrt()));
        assert!(a.operator().max_abs_diff(&expected) < 1e-14);
        assert!((ewi_eval(&singlet, &a).unwrap() + 1.0 / 3f64.sqrt()).abs() < 1e-14);
        assert!(ewi_eval(&rho0, &a).unwrap().abs() < 1e-14);
    }

    #[test]
    fn product_states_against_tangent_witness() {
        // Bloch vectors along z and at angle δ in the xz-plane
        let a = optimal_witness(
            &werner(1.0 / 3.0).unwrap(),
            &bell_state(BellState::PsiMinus),
        )
        .unwrap();
        for delta in [0.0, 0.7, 2.0, std::f64::consts::PI] {
            let up = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
            let tilted = vec![
                Complex64::new((delta / 2.0f64).cos(), 0.0),
                Complex64::new((delta / 2.0f64).sin(), 0.0),
            ];
            let rho = DensityMatrix::from_pure(&kron_vec(&up, &tilted), (2, 2)).unwrap();
            let expected = (1.0 + delta.cos()) / (2.0 * 3f64.sqrt());
            assert!((ewi_eval(&rho, &a).unwrap() - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn identical_states_have_no_witness() {
        let w = werner(0.2).unwrap();
        assert_eq!(optimal_witness(&w, &w), Err(Error::ZeroDistance));
    }

    #[test]
    fn projector_witness_algebra() {
        for d in [2, 3] {
            let p = ComplexMatrix::outer(&weyl_basis_state(0, 1 % d, d).unwrap());
            let w = witness_projector(&p, d).unwrap();
            let tr = p.matmul(w.operator()).trace().re;
            assert!((tr - (1.0 - d as f64)).abs() < 1e-13);
        }
        let not_projector = ComplexMatrix::identity(4);
        assert!(witness_projector(&not_projector, 2).is_err());
    }
}
