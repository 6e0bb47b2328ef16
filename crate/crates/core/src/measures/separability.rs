//! Spectral separability tests.
//!
//! The Kuś–Życzkowski ball around the tracial state `𝟙/D` is taken as the
//! purity bound `Tr ρ² ≤ 1/(D−1)`, equivalently
//! `‖ρ − 𝟙/D‖ ≤ √(1/(D−1) − 1/D)`. At `D = 4` this is the Werner bound
//! `α ≤ 1/3`.

use super::purity;
use crate::error::{Error, Result};
use crate::linalg::schmidt_decompose;
use crate::states::DensityMatrix;
use crate::DEFAULT_TOL;

pub fn kz_purity_bound(dim: usize) -> f64 {
    1.0 / (dim as f64 - 1.0)
}

pub fn kz_ball_member(rho: &DensityMatrix) -> bool {
    kz_ball_member_tol(rho, DEFAULT_TOL)
}

/// Every member of the ball is absolutely separable.
pub fn kz_ball_member_tol(rho: &DensityMatrix, tol: f64) -> bool {
    let dim = rho.dim();
    if dim < 2 {
        return true;
    }
    purity(rho) <= kz_purity_bound(dim) + tol
}

fn validate_spectrum(spectrum: &[f64], tol: f64) -> Result<()> {
    if spectrum.len() != 4 {
        return Err(Error::Malformed(format!(
            "two-qubit spectrum needs 4 values, got {}",
            spectrum.len()
        )));
    }
    if spectrum.iter().any(|&x| x < -tol || !x.is_finite()) {
        return Err(Error::Malformed(format!(
            "spectrum {spectrum:?} has negative or non-finite entries"
        )));
    }
    let total: f64 = spectrum.iter().sum();
    if (total - 1.0).abs() > tol {
        return Err(Error::Malformed(format!(
            "spectrum sums to {total}, expected 1"
        )));
    }
    if spectrum.windows(2).any(|w| w[0] < w[1] - tol) {
        return Err(Error::Malformed(format!(
            "spectrum {spectrum:?} is not in descending order"
        )));
    }
    Ok(())
}

/// `ρ₁ − ρ₃ − 2√(ρ₂ρ₄)` for a descending two-qubit spectrum; nonpositive
/// values certify absolute separability.
pub fn abs_sep_2x2_margin(spectrum: &[f64]) -> Result<f64> {
    validate_spectrum(spectrum, DEFAULT_TOL)?;
    let p: Vec<f64> = spectrum.iter().map(|x| x.max(0.0)).collect();
    Ok(p[0] - p[2] - 2.0 * (p[1] * p[3]).sqrt())
}

pub fn abs_sep_2x2(spectrum: &[f64]) -> Result<bool> {
    Ok(abs_sep_2x2_margin(spectrum)? <= DEFAULT_TOL)
}

/// True iff `β > 1/d`, which certifies that `β P + (1−β) σ` with `P` a
/// maximally entangled projector orthogonal to `σ` is entangled. The boundary
/// itself is not certified: `β` must exceed `1/d` by more than the default
/// tolerance.
pub fn split_bound_check(beta: f64, d: usize) -> Result<bool> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::OutOfRange {
            name: "beta",
            value: beta,
            expected: "0 <= beta <= 1",
        });
    }
    if d == 0 {
        return Err(Error::OutOfRange {
            name: "d",
            value: 0.0,
            expected: "d >= 1",
        });
    }
    Ok(beta > 1.0 / d as f64 + DEFAULT_TOL)
}

/// Weight of the maximally entangled projector in a generalized Werner state:
/// `α + (1−α)/d²`.
pub fn werner_split_weight(alpha: f64, d: usize) -> f64 {
    alpha + (1.0 - alpha) / (d * d) as f64
}

/// Detects a split `ρ = β P + (1−β) σ` with `P` projecting onto the top
/// eigenvector, provided that eigenvalue is nondegenerate and its eigenvector
/// is maximally entangled. Returns `β`.
pub fn maxent_split_weight(rho: &DensityMatrix) -> Option<f64> {
    let d = rho.square_split().ok()?;
    let spec = rho.spectrum();
    if spec.dim() > 1 && spec.values[0] - spec.values[1] <= 1e-8 {
        return None;
    }
    let sd = schmidt_decompose(&spec.vectors[0], (d, d)).ok()?;
    let target = 1.0 / (d as f64).sqrt();
    if sd.coefficients.iter().all(|c| (c - target).abs() <= 1e-8) {
        Some(spec.values[0].clamp(0.0, 1.0))
    } else {
        None
    }
}
