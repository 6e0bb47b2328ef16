use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{
    basis_vector, herm_eigensystem, kron_vec, schmidt_decompose, ComplexMatrix, StateVector,
};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn check_unit_interval(name: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::OutOfRange {
            name,
            value,
            expected: "0 <= value <= 1",
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellState {
    PsiPlus,
    PsiMinus,
    PhiPlus,
    PhiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PsiPlus,
        BellState::PsiMinus,
        BellState::PhiPlus,
        BellState::PhiMinus,
    ];

    /// `ψ± = (|01⟩ ± |10⟩)/√2`, `φ± = (|00⟩ ± |11⟩)/√2`.
    pub fn vector(self) -> StateVector {
        let s = 0.5f64.sqrt();
        let z = c(0.0);
        match self {
            BellState::PsiPlus => vec![z, c(s), c(s), z],
            BellState::PsiMinus => vec![z, c(s), c(-s), z],
            BellState::PhiPlus => vec![c(s), z, z, c(s)],
            BellState::PhiMinus => vec![c(s), z, z, c(-s)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BellState::PsiPlus => "psi+",
            BellState::PsiMinus => "psi-",
            BellState::PhiPlus => "phi+",
            BellState::PhiMinus => "phi-",
        }
    }
}

impl fmt::Display for BellState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BellState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BellState::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "Bell state",
                name: s.to_string(),
                valid: "psi+, psi-, phi+, phi-".into(),
            })
    }
}

pub fn bell_state(kind: BellState) -> DensityMatrix {
    DensityMatrix::trusted(ComplexMatrix::outer(&kind.vector()), (2, 2))
}

/// Two-qubit computational basis projector `|ij⟩⟨ij|`; `product_state(0, 1)` is `ρ_↑↓`.
pub fn product_state(i: usize, j: usize) -> DensityMatrix {
    assert!(i < 2 && j < 2, "qubit labels are 0 or 1");
    let v = basis_vector(4, 2 * i + j);
    DensityMatrix::trusted(ComplexMatrix::outer(&v), (2, 2))
}

/// `|χ_kl⟩ = (1/√d) Σ_j e^{2πi jl/d} |j⟩⊗|j+k mod d⟩`.
pub fn weyl_basis_state(k: usize, l: usize, d: usize) -> Result<StateVector> {
    if d == 0 || k >= d || l >= d {
        return Err(Error::IndexOutOfRange { k, l, d });
    }
    let mut v = vec![c(0.0); d * d];
    let norm = 1.0 / (d as f64).sqrt();
    for j in 0..d {
        let phase = 2.0 * PI * ((j * l) % d) as f64 / d as f64;
        v[j * d + (j + k) % d] = Complex64::from_polar(norm, phase);
    }
    Ok(v)
}

/// `𝟙 / (d1 d2)`.
pub fn tracial(split: (usize, usize)) -> Result<DensityMatrix> {
    let dim = split.0 * split.1;
    if dim == 0 {
        return Err(Error::SplitMismatch {
            dim,
            d1: split.0,
            d2: split.1,
        });
    }
    Ok(DensityMatrix::trusted(
        ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        split,
    ))
}

/// `α ρ⁻ + (1−α)/4 𝟙`.
pub fn werner(alpha: f64) -> Result<DensityMatrix> {
    check_unit_interval("alpha", alpha)?;
    let m = &bell_state(BellState::PsiMinus).matrix().scale_real(alpha)
        + &ComplexMatrix::identity(4).scale_real((1.0 - alpha) / 4.0);
    Ok(DensityMatrix::trusted(m, (2, 2)))
}

/// `α P + (1−α)/d² 𝟙` for a projector `P` onto a maximally entangled vector of `C^d ⊗ C^d`.
pub fn werner_generalized(alpha: f64, d: usize, p: &ComplexMatrix) -> Result<DensityMatrix> {
    check_unit_interval("alpha", alpha)?;
    check_maxent_projector(p, d)?;
    let dim = d * d;
    let m = &p.scale_real(alpha) + &ComplexMatrix::identity(dim).scale_real((1.0 - alpha) / dim as f64);
    Ok(DensityMatrix::trusted(m, (d, d)))
}

/// Checks that `p` is a rank-1 projector onto a maximally entangled vector
/// and returns that vector.
pub fn check_maxent_projector(p: &ComplexMatrix, d: usize) -> Result<StateVector> {
    let dim = d * d;
    if p.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        });
    }
    let idempotence = p.matmul(p).max_abs_diff(p);
    let trace_gap = (p.trace() - c(1.0)).norm();
    let deviation = idempotence.max(trace_gap).max(p.hermiticity_deviation());
    if deviation > 1e-9 {
        return Err(Error::NotProjector { deviation });
    }
    let v = herm_eigensystem(p)?.vectors.swap_remove(0);
    let sd = schmidt_decompose(&v, (d, d))?;
    let target = 1.0 / (d as f64).sqrt();
    if sd.coefficients.iter().any(|x| (x - target).abs() > 1e-8) {
        return Err(Error::NotMaximallyEntangled {
            coefficients: sd.coefficients,
        });
    }
    Ok(v)
}

/// `|ψ_θ⟩ = sinθ |↑↓⟩ − cosθ |↓↑⟩`.
pub fn psi_theta(theta: f64) -> StateVector {
    vec![c(0.0), c(theta.sin()), c(-theta.cos()), c(0.0)]
}

pub fn rho_theta(theta: f64) -> DensityMatrix {
    DensityMatrix::trusted(ComplexMatrix::outer(&psi_theta(theta)), (2, 2))
}

/// `λ ρ_θ + ½(1−λ)(ρ_↑↑ + ρ_↓↓)`.
pub fn gisin(lambda: f64, theta: f64) -> Result<DensityMatrix> {
    check_unit_interval("lambda", lambda)?;
    let classical = ComplexMatrix::from_real_diagonal(&[0.5, 0.0, 0.0, 0.5]);
    let m = &rho_theta(theta).matrix().scale_real(lambda) + &classical.scale_real(1.0 - lambda);
    Ok(DensityMatrix::trusted(m, (2, 2)))
}

/// `sinθ |000⟩ + cosθ |111⟩`.
pub fn ghz_theta_vector(theta: f64) -> StateVector {
    let mut v = vec![c(0.0); 8];
    v[0] = c(theta.sin());
    v[7] = c(theta.cos());
    v
}

/// GHZ_θ with the third qubit traced out; by symmetry any qubit gives the same matrix.
pub fn ghz_traced(theta: f64) -> DensityMatrix {
    let m = crate::linalg::reduced_state(&ghz_theta_vector(theta), &[2, 2, 2], &[0, 1])
        .expect("three-qubit layout is fixed");
    DensityMatrix::trusted(m, (2, 2))
}

/// `½(ρ⁺ + ω⁺) = ¼(𝟙⊗𝟙 + σ_x⊗σ_x)`, a rank-2 separable state.
pub fn narnhofer() -> DensityMatrix {
    let m = ComplexMatrix::from_real_rows(&[
        &[1.0, 0.0, 0.0, 1.0],
        &[0.0, 1.0, 1.0, 0.0],
        &[0.0, 1.0, 1.0, 0.0],
        &[1.0, 0.0, 0.0, 1.0],
    ]);
    DensityMatrix::trusted(m.scale_real(0.25), (2, 2))
}

/// Product vector `|i⟩⊗|j⟩` on a `(d1, d2)` split.
pub fn product_vector(i: usize, j: usize, split: (usize, usize)) -> StateVector {
    kron_vec(&basis_vector(split.0, i), &basis_vector(split.1, j))
}
