use num_complex::Complex64;

use super::isometry::{isometry_of_maxent, maxent_from_isometry, Isometry};
use super::teleport::{BellMeasurementOutcome, PROTOCOL_TOL};
use crate::error::{Error, Result};
use crate::linalg::{kron_vec, norm, reduced_state, ComplexMatrix, StateVector};

#[derive(Debug, Clone, PartialEq)]
pub struct SwapRun {
    /// The post-state lives on factors (1,4).
    pub outcome: BellMeasurementOutcome,
    /// Isometry read off the simulated (1,4) state.
    pub i14: Isometry,
    /// `I₃₄ · Ī₂₃ · I₁₂` with `I₂₃ = W_kl`.
    pub predicted: Isometry,
    pub composition_error: f64,
}

/// Entanglement swapping: starts from `maxent(I₁₂) ⊗ maxent(I₃₄)`, projects
/// factors (2,3) onto the Weyl state `χ_kl`, and reads off the isometry of the
/// resulting (1,4) pair.
///
/// With `|ψ⟩ = (1/√d) Σ_i |i⟩|I i⟩` the composition comes out as
/// `I₁₄ = I₃₄ · Ī₂₃ · I₁₂`; it is checked up to a global phase, together with
/// maximal mixedness of both (1,4) marginals.
pub fn swap(outcome: (usize, usize), i12: &Isometry, i34: &Isometry) -> Result<SwapRun> {
    let d = i12.d();
    if i34.d() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: i34.d(),
        });
    }
    let i23 = Isometry::weyl(outcome.0, outcome.1, d)?;
    let chi = maxent_from_isometry(&i23);
    let input = kron_vec(&maxent_from_isometry(i12), &maxent_from_isometry(i34));

    let d2 = d * d;
    let d3 = d2 * d;
    let mut pair: StateVector = vec![Complex64::new(0.0, 0.0); d2];
    for a in 0..d {
        for e in 0..d {
            let mut acc = Complex64::new(0.0, 0.0);
            for b in 0..d {
                for c in 0..d {
                    acc += chi[b * d + c].conj() * input[a * d3 + b * d2 + c * d + e];
                }
            }
            pair[a * d + e] = acc;
        }
    }
    let probability = norm(&pair).powi(2);
    let pair: StateVector = pair.iter().map(|z| z / probability.sqrt()).collect();

    let tracial = ComplexMatrix::identity(d).scale_real(1.0 / d as f64);
    for keep in [0, 1] {
        let marginal = reduced_state(&pair, &[d, d], &[keep])?;
        let deviation = marginal.max_abs_diff(&tracial);
        if deviation > PROTOCOL_TOL {
            return Err(Error::Assertion(format!(
                "outcome {outcome:?}: (1,4) marginal deviates from 1/d by {deviation:e}"
            )));
        }
    }
    let i14 = isometry_of_maxent(&pair, d)
        .map_err(|e| Error::Assertion(format!("outcome {outcome:?}: {e}")))?;
    let predicted = i34.compose(&i23.conj())?.compose(i12)?;
    let composition_error = i14.phase_distance(&predicted)?;
    if composition_error > PROTOCOL_TOL {
        return Err(Error::Assertion(format!(
            "outcome {outcome:?}: I14 differs from I34 · conj(I23) · I12 by {composition_error:e}"
        )));
    }
    Ok(SwapRun {
        outcome: BellMeasurementOutcome {
            index: outcome,
            probability,
            post_state: pair,
        },
        i14,
        predicted,
        composition_error,
    })
}

/// Runs [`swap`] for all `d²` outcomes in label order.
pub fn swap_all(i12: &Isometry, i34: &Isometry) -> Result<Vec<SwapRun>> {
    let d = i12.d();
    (0..d)
        .flat_map(|k| (0..d).map(move |l| (k, l)))
        .map(|o| swap(o, i12, i34))
        .collect()
}
