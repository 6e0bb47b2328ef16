use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{herm_eigensystem_tol, pauli, ComplexMatrix};
use crate::states::DensityMatrix;

/// Spin-flipped state `(σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
pub fn spin_flip(rho: &ComplexMatrix) -> ComplexMatrix {
    let yy = pauli::sigma_y().kron(&pauli::sigma_y());
    yy.matmul(&rho.conj()).matmul(&yy)
}

/// Two-qubit concurrence `max(0, λ₁ − λ₂ − λ₃ − λ₄)`, where the `λ_i` are the
/// square roots of the eigenvalues of `ρ ρ̃` in decreasing order.
///
/// The `λ_i` are obtained as singular values of `τ = X† (σ_y⊗σ_y) X̄`, where
/// `ρ = X X†` comes from the eigendecomposition. `τ τ̄ = τ τ†` has the same
/// nonzero spectrum as `ρ ρ̃`, and the singular values are read off the
/// Hermitian block matrix `[[0, τ], [τ†, 0]]`. Unlike a square root of the
/// eigenvalues of `√ρ ρ̃ √ρ`, this does not amplify rounding near zero.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    rho.expect_split((2, 2))?;
    let spec = rho.spectrum();
    let p_max = spec.max().max(0.0);
    let columns: Vec<Vec<Complex64>> = spec
        .values
        .iter()
        .zip(&spec.vectors)
        .filter(|(&p, _)| p > 1e-14 * p_max)
        .map(|(&p, v)| v.iter().map(|z| z * p.sqrt()).collect())
        .collect();
    let r = columns.len();
    if r == 0 {
        return Err(Error::Assertion("state has no positive eigenvalue".into()));
    }

    let yy = pauli::sigma_y().kron(&pauli::sigma_y());
    let flipped: Vec<Vec<Complex64>> = columns
        .iter()
        .map(|x| {
            let conj: Vec<Complex64> = x.iter().map(|z| z.conj()).collect();
            yy.apply(&conj)
        })
        .collect();
    let tau = |i: usize, j: usize| -> Complex64 {
        columns[i]
            .iter()
            .zip(&flipped[j])
            .map(|(a, b)| a.conj() * b)
            .sum()
    };

    let block = ComplexMatrix::from_fn(2 * r, |i, j| match (i < r, j < r) {
        (true, false) => tau(i, j - r),
        (false, true) => tau(j, i - r).conj(),
        _ => Complex64::new(0.0, 0.0),
    });
    let values = herm_eigensystem_tol(&block, f64::INFINITY)?.values;
    let mut lambdas: Vec<f64> = values[..r].iter().map(|&x| x.max(0.0)).collect();
    lambdas.resize(4, 0.0);
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// `2 |ad − bc|` for a pure two-qubit vector `(a, b, c, d)`.
pub fn concurrence_of_pure(v: &[Complex64]) -> Result<f64> {
    if v.len() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: v.len(),
        });
    }
    Ok(2.0 * (v[0] * v[3] - v[1] * v[2]).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_state, gisin, rho_theta, tracial, werner, BellState};

    #[test]
    fn bell_states_are_maximal() {
        for b in BellState::ALL {
            assert!((concurrence(&bell_state(b)).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rho_theta_gives_sin_two_theta() {
        for k in 0..=20 {
            let t = k as f64 * std::f64::consts::FRAC_PI_2 / 20.0;
            let c = concurrence(&rho_theta(t)).unwrap();
            assert!((c - (2.0 * t).sin().abs()).abs() < 1e-12, "theta {t}: {c}");
        }
    }

    #[test]
    fn werner_closed_form() {
        for a in [0.0, 0.2, 1.0 / 3.0, 0.5, 0.9] {
            let c = concurrence(&werner(a).unwrap()).unwrap();
            let expected = ((3.0 * a - 1.0) / 2.0).max(0.0);
            assert!((c - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn gisin_closed_form() {
        // the only nonzero coherence is λ sinθ cosθ, the diagonal corners are (1−λ)/2
        let (l, t): (f64, f64) = (0.8, 0.35);
        let expected = (2.0 * (l * t.sin() * t.cos() - (1.0 - l) / 2.0)).max(0.0);
        let c = concurrence(&gisin(l, t).unwrap()).unwrap();
        assert!((c - expected).abs() < 1e-12);
    }

    #[test]
    fn tracial_is_zero_and_split_is_checked() {
        assert_eq!(concurrence(&tracial((2, 2)).unwrap()).unwrap(), 0.0);
        assert!(matches!(
            concurrence(&tracial((3, 3)).unwrap()),
            Err(Error::WrongSplit { .. })
        ));
    }

    #[test]
    fn pure_formula_agrees_on_bell_vector() {
        let c = concurrence_of_pure(&BellState::PsiPlus.vector()).unwrap();
        assert!((c - 1.0).abs() < 1e-15);
    }
}
