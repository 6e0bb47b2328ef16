use std::f64::consts::SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{pauli, ComplexMatrix, StateVector};
use crate::states::DensityMatrix;

/// Unitarity tolerance for switch construction.
pub const UNITARITY_TOL: f64 = 1e-10;

/// A global unitary that selects a new factorization `U(A₁⊗𝟙)U†`, `U(𝟙⊗A₂)U†`.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorizationSwitch {
    unitary: ComplexMatrix,
    split: (usize, usize),
    description: String,
}

impl FactorizationSwitch {
    pub fn new(
        unitary: ComplexMatrix,
        split: (usize, usize),
        description: impl Into<String>,
    ) -> Result<Self> {
        crate::linalg::check_split(unitary.dim(), split)?;
        let deviation = unitary.unitarity_deviation();
        if deviation > UNITARITY_TOL {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self {
            unitary,
            split,
            description: description.into(),
        })
    }

    pub fn identity(split: (usize, usize)) -> Self {
        Self {
            unitary: ComplexMatrix::identity(split.0 * split.1),
            split,
            description: "identity".into(),
        }
    }

    /// `U = Σ_k |target_k⟩⟨source_k|` for two orthonormal bases.
    pub(crate) fn from_basis_map(
        sources: &[StateVector],
        targets: &[StateVector],
        split: (usize, usize),
        description: impl Into<String>,
    ) -> Result<Self> {
        let n = split.0 * split.1;
        assert_eq!(sources.len(), n, "source basis is incomplete");
        assert_eq!(targets.len(), n, "target basis is incomplete");
        let mut u = ComplexMatrix::zeros(n);
        for (s, t) in sources.iter().zip(targets) {
            for i in 0..n {
                for j in 0..n {
                    u[(i, j)] += t[i] * s[j].conj();
                }
            }
        }
        Self::new(u, split, description)
    }

    pub fn unitary(&self) -> &ComplexMatrix {
        &self.unitary
    }

    pub fn split(&self) -> (usize, usize) {
        self.split
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn apply_vector(&self, v: &[Complex64]) -> Result<StateVector> {
        if v.len() != self.unitary.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.unitary.dim(),
                found: v.len(),
            });
        }
        Ok(self.unitary.apply(v))
    }
}

/// `U ρ U†`. The split is kept; only the meaning of the factors changes.
pub fn conjugate(rho: &DensityMatrix, s: &FactorizationSwitch) -> Result<DensityMatrix> {
    if rho.dim() != s.unitary.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.unitary.dim(),
            found: rho.dim(),
        });
    }
    Ok(DensityMatrix::trusted(
        rho.matrix().conjugate_by(&s.unitary),
        rho.split(),
    ))
}

/// Image `U op U†` of an observable under the switch.
pub fn algebra_image(s: &FactorizationSwitch, op: &ComplexMatrix) -> Result<ComplexMatrix> {
    if op.dim() != s.unitary.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.unitary.dim(),
            found: op.dim(),
        });
    }
    Ok(op.conjugate_by(&s.unitary))
}

fn sigma_x_sigma_y() -> ComplexMatrix {
    pauli::sigma_x().kron(&pauli::sigma_y())
}

fn two_qubit(m: ComplexMatrix, description: &str) -> FactorizationSwitch {
    FactorizationSwitch::new(m, (2, 2), description).expect("closed-form unitary")
}

/// `(𝟙⊗𝟙 + i σ_x⊗σ_y)/√2`, which maps the Bell basis onto product states.
pub fn u_switch() -> FactorizationSwitch {
    let m = &ComplexMatrix::identity(4) + &sigma_x_sigma_y().scale(Complex64::new(0.0, 1.0));
    two_qubit(m.scale_real(1.0 / SQRT_2), "U = (1 + i sx⊗sy)/√2")
}

/// `(f₋ 𝟙⊗𝟙 − i f₊ σ_x⊗σ_y)/√2`, `f± = cosθ ± sinθ`; sends `ψ_θ` to `ψ⁺`
/// up to a sign.
pub fn u_theta(theta: f64) -> FactorizationSwitch {
    let (s, c) = theta.sin_cos();
    let m = &ComplexMatrix::identity(4).scale_real(c - s)
        + &sigma_x_sigma_y().scale(Complex64::new(0.0, -(c + s)));
    two_qubit(m.scale_real(1.0 / SQRT_2), &format!("U_theta(theta = {theta})"))
}

/// `U U_θ = cosθ 𝟙⊗𝟙 − i sinθ σ_x⊗σ_y`; sends `ρ_θ` to `ρ_↓↑`.
pub fn u_tilde_theta(theta: f64) -> FactorizationSwitch {
    let (s, c) = theta.sin_cos();
    let m = &ComplexMatrix::identity(4).scale_real(c)
        + &sigma_x_sigma_y().scale(Complex64::new(0.0, -s));
    two_qubit(m, &format!("U~_theta(theta = {theta})"))
}

/// Entangles the traced GHZ state for `0 ≤ θ ≤ π/4`.
pub fn u1_ghz() -> FactorizationSwitch {
    let r = SQRT_2;
    let m = ComplexMatrix::from_real_rows(&[
        &[r, 0.0, 0.0, 0.0],
        &[0.0, 1.0, 0.0, -1.0],
        &[0.0, -1.0, 0.0, -1.0],
        &[0.0, 0.0, r, 0.0],
    ]);
    two_qubit(m.scale_real(1.0 / SQRT_2), "U1 (GHZ, theta <= pi/4)")
}

/// Entangles the traced GHZ state for `π/4 ≤ θ ≤ π/2`.
pub fn u2_ghz() -> FactorizationSwitch {
    let r = SQRT_2;
    let m = ComplexMatrix::from_real_rows(&[
        &[0.0, 0.0, 0.0, r],
        &[1.0, 0.0, -1.0, 0.0],
        &[1.0, 0.0, 1.0, 0.0],
        &[0.0, r, 0.0, 0.0],
    ]);
    two_qubit(m.scale_real(1.0 / SQRT_2), "U2 (GHZ, theta >= pi/4)")
}

/// `U1` for `θ ≤ π/4` and `U2` above, the pair that entangles the traced GHZ
/// state maximally across the whole range.
pub fn ghz_entangler(theta: f64) -> FactorizationSwitch {
    if theta <= std::f64::consts::FRAC_PI_4 {
        u1_ghz()
    } else {
        u2_ghz()
    }
}

/// Maps the separable corner state `½(ρ⁺ + ω⁺)` to a state with concurrence ½.
pub fn narnhofer_unitary() -> FactorizationSwitch {
    let r = SQRT_2;
    let m = ComplexMatrix::from_real_rows(&[
        &[1.0, 0.0, 0.0, 1.0],
        &[0.0, r, 0.0, 0.0],
        &[0.0, 0.0, r, 0.0],
        &[-1.0, 0.0, 0.0, 1.0],
    ]);
    two_qubit(m.scale_real(1.0 / SQRT_2), "U_N")
}
