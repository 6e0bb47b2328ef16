use serde::Serialize;

use super::switch::{conjugate, u_theta};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::states::{gisin, BellState, DensityMatrix};

/// Local filter `F = T_left ⊗ T_right` with diagonal, contractive factors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocalFilter {
    pub t_left: [f64; 2],
    pub t_right: [f64; 2],
}

impl LocalFilter {
    pub fn new(t_left: [f64; 2], t_right: [f64; 2]) -> Result<Self> {
        for &x in t_left.iter().chain(&t_right) {
            if !(x > 0.0 && x <= 1.0) {
                return Err(Error::OutOfRange {
                    name: "filter entry",
                    value: x,
                    expected: "0 < t <= 1",
                });
            }
        }
        Ok(Self { t_left, t_right })
    }

    pub fn operator(&self) -> ComplexMatrix {
        ComplexMatrix::from_real_diagonal(&self.t_left)
            .kron(&ComplexMatrix::from_real_diagonal(&self.t_right))
    }
}

/// Gisin's filter for angle `θ ∈ (0, π/4]`: `diag(√cotθ, 1) ⊗ diag(1, √cotθ)`,
/// rescaled by `1/√cotθ` per factor so both factors are contractions. The
/// scale drops out after renormalization.
pub fn gisin_filter(theta: f64) -> Result<LocalFilter> {
    if !(theta > 0.0 && theta <= std::f64::consts::FRAC_PI_4 + 1e-15) {
        return Err(Error::OutOfRange {
            name: "theta",
            value: theta,
            expected: "0 < theta <= pi/4",
        });
    }
    let r = theta.tan().min(1.0).sqrt();
    LocalFilter::new([1.0, r], [r, 1.0])
}

/// `F ρ F† / Tr(F ρ F†)` on a two-qubit state.
pub fn apply_filter(rho: &DensityMatrix, f: &LocalFilter) -> Result<DensityMatrix> {
    rho.expect_split((2, 2))?;
    let out = rho.matrix().conjugate_by(&f.operator());
    let tr = out.trace().re;
    if tr <= 1e-300 {
        return Err(Error::ZeroFilteredTrace);
    }
    Ok(DensityMatrix::trusted(out.scale_real(1.0 / tr), (2, 2)))
}

/// `U_θ ρ_Gisin(λ, θ) U_θ† = λ ρ⁺ + ½(1−λ)(ρ_↑↑ + ρ_↓↓)`, whose entanglement
/// no longer depends on `θ`. The conjugation is checked against the closed
/// form.
pub fn gisin_unitary_family(lambda: f64, theta: f64) -> Result<DensityMatrix> {
    let out = conjugate(&gisin(lambda, theta)?, &u_theta(theta))?;
    let closed = &crate::states::bell_state(BellState::PsiPlus).matrix().scale_real(lambda)
        + &ComplexMatrix::from_real_diagonal(&[0.5, 0.0, 0.0, 0.5]).scale_real(1.0 - lambda);
    let deviation = out.matrix().max_abs_diff(&closed);
    if deviation > 1e-10 {
        return Err(Error::Assertion(format!(
            "unitary Gisin family deviates from its closed form by {deviation:e}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{concurrence, purity};
    use crate::states::{bell_state, product_state};
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn quarter_pi_filter_is_identity() {
        let f = gisin_filter(FRAC_PI_4).unwrap();
        let rho = gisin(0.7, FRAC_PI_4).unwrap();
        let out = apply_filter(&rho, &f).unwrap();
        assert!(out.matrix().max_abs_diff(rho.matrix()) < 1e-14);
    }

    #[test]
    fn pure_gisin_filters_to_singlet() {
        for t in [0.1, 0.35, 0.7] {
            let out = apply_filter(&gisin(1.0, t).unwrap(), &gisin_filter(t).unwrap()).unwrap();
            let singlet = bell_state(BellState::PsiMinus);
            assert!(out.matrix().max_abs_diff(singlet.matrix()) < 1e-12);
        }
    }

    #[test]
    fn filtered_gisin_closed_form() {
        let (l, t): (f64, f64) = (0.8, 0.35);
        let s = (2.0 * t).sin();
        let n = l * s + 1.0 - l;
        let classical = &product_state(0, 0).matrix().scale_real(0.5 * (1.0 - l))
            + &product_state(1, 1).matrix().scale_real(0.5 * (1.0 - l));
        let expected = (&bell_state(BellState::PsiMinus).matrix().scale_real(l * s) + &classical)
            .scale_real(1.0 / n);
        let out = apply_filter(&gisin(l, t).unwrap(), &gisin_filter(t).unwrap()).unwrap();
        assert!(out.matrix().max_abs_diff(&expected) < 1e-14);
        // concurrence of the closed form: (λs − (1−λ))/N
        let c = concurrence(&out).unwrap();
        assert!((c - (l * s - (1.0 - l)) / n).abs() < 1e-12);
        assert!((purity(&out) - purity(&gisin(l, t).unwrap())).abs() > 1e-3);
    }

    #[test]
    fn unitary_family_is_theta_independent() {
        for t in [0.2, 0.35, 1.0] {
            let out = gisin_unitary_family(0.8, t).unwrap();
            assert!((concurrence(&out).unwrap() - 0.6).abs() < 1e-12);
            assert!((purity(&out) - purity(&gisin(0.8, t).unwrap())).abs() < 1e-14);
        }
        assert!(concurrence(&gisin_unitary_family(0.0, 0.3).unwrap()).unwrap() < 1e-12);
    }

    #[test]
    fn filter_domain() {
        assert!(gisin_filter(0.0).is_err());
        assert!(gisin_filter(1.0).is_err());
        assert!(LocalFilter::new([1.0, 0.0], [1.0, 1.0]).is_err());
    }
}
