use serde::{Deserialize, Serialize};

use super::DensityMatrix;
use crate::error::Result;
use crate::linalg::{pauli, ComplexMatrix};

/// Two-qubit coefficients in
/// `ρ = ¼(𝟙⊗𝟙 + r_i σ_i⊗𝟙 + u_i 𝟙⊗σ_i + t_ij σ_i⊗σ_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BlochForm {
    pub r: [f64; 3],
    pub u: [f64; 3],
    pub t: [[f64; 3]; 3],
}

impl BlochForm {
    /// The operator the coefficients describe, without positivity checks.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let s = pauli::sigmas();
        let id = pauli::identity2();
        let mut acc = id.kron(&id);
        for i in 0..3 {
            acc = &acc + &s[i].kron(&id).scale_real(self.r[i]);
            acc = &acc + &id.kron(&s[i]).scale_real(self.u[i]);
            for j in 0..3 {
                acc = &acc + &s[i].kron(&s[j]).scale_real(self.t[i][j]);
            }
        }
        acc.scale_real(0.25)
    }

    /// `tᵀ t`, whose two largest eigenvalues govern CHSH violation.
    pub fn t_transpose_t(&self) -> [[f64; 3]; 3] {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..3).map(|k| self.t[k][i] * self.t[k][j]).sum();
            }
        }
        out
    }
}

/// Builds and validates the state with the given Bloch coefficients.
pub fn from_bloch(b: &BlochForm) -> Result<DensityMatrix> {
    DensityMatrix::new(b.to_matrix(), (2, 2))
}

/// Recovers `r_i = Tr(ρ σ_i⊗𝟙)`, `u_i = Tr(ρ 𝟙⊗σ_i)`, `t_ij = Tr(ρ σ_i⊗σ_j)`.
pub fn to_bloch(rho: &DensityMatrix) -> Result<BlochForm> {
    rho.expect_split((2, 2))?;
    let m = rho.matrix();
    let s = pauli::sigmas();
    let id = pauli::identity2();
    let expect = |op: ComplexMatrix| m.matmul(&op).trace().re;
    let mut b = BlochForm::default();
    for i in 0..3 {
        b.r[i] = expect(s[i].kron(&id));
        b.u[i] = expect(id.kron(&s[i]));
        for j in 0..3 {
            b.t[i][j] = expect(s[i].kron(&s[j]));
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::states::{bell_state, product_state, BellState};

    #[test]
    fn zero_coefficients_give_tracial() {
        let rho = from_bloch(&BlochForm::default()).unwrap();
        let tracial = ComplexMatrix::identity(4).scale_real(0.25);
        assert!(rho.matrix().max_abs_diff(&tracial) < 1e-15);
    }

    #[test]
    fn singlet_has_minus_identity_correlations() {
        let b = to_bloch(&bell_state(BellState::PsiMinus)).unwrap();
        assert_eq!(b.r, [0.0; 3]);
        assert_eq!(b.u, [0.0; 3]);
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { -1.0 } else { 0.0 };
                assert!((b.t[i][j] - expected).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn up_down_product() {
        let b = to_bloch(&product_state(0, 1)).unwrap();
        assert_eq!(b.r, [0.0, 0.0, 1.0]);
        assert_eq!(b.u, [0.0, 0.0, -1.0]);
        assert_eq!(b.t, [[0.0; 3], [0.0; 3], [0.0, 0.0, -1.0]]);
    }

    #[test]
    fn unphysical_coefficients_are_rejected() {
        let b = BlochForm {
            r: [0.0, 0.0, 2.0],
            ..Default::default()
        };
        assert!(matches!(from_bloch(&b), Err(Error::NotPsd { .. })));
    }
}
