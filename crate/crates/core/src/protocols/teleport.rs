use num_complex::Complex64;
use serde::Serialize;

use super::isometry::{maxent_from_isometry, Isometry};
use crate::error::{Error, Result};
use crate::linalg::{basis_vector, ensure_normalized, inner, norm, StateVector};
use crate::DEFAULT_TOL;

/// Tolerance for the fidelity and composition checks run by the protocols.
pub const PROTOCOL_TOL: f64 = 1e-9;

/// One outcome of a generalized Bell measurement in the Weyl basis.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BellMeasurementOutcome {
    /// Weyl label `(k, l)` of the projector `|χ_kl⟩⟨χ_kl|`.
    pub index: (usize, usize),
    pub probability: f64,
    /// Normalized state left on the unmeasured factors.
    #[serde(skip)]
    pub post_state: StateVector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TeleportRun {
    pub outcome: BellMeasurementOutcome,
    /// Bob's correction target: his state is `correction · φ`.
    pub correction: Isometry,
    /// `|⟨φ| correction⁻¹ |bob⟩|`.
    pub fidelity: f64,
}

fn check_label(index: (usize, usize), d: usize) -> Result<()> {
    if index.0 >= d || index.1 >= d {
        return Err(Error::IndexOutOfRange {
            k: index.0,
            l: index.1,
            d,
        });
    }
    Ok(())
}

/// Projects factors (1,2) of `φ₁ ⊗ ψ₂₃` onto `χ₁₂` and returns the
/// unnormalized vector left on factor 3.
fn project_first_pair(phi: &[Complex64], resource: &[Complex64], chi: &[Complex64]) -> StateVector {
    let d = phi.len();
    let mut out = vec![Complex64::new(0.0, 0.0); d];
    for (c, slot) in out.iter_mut().enumerate() {
        for a in 0..d {
            for b in 0..d {
                *slot += chi[a * d + b].conj() * phi[a] * resource[b * d + c];
            }
        }
    }
    out
}

/// Teleports `φ` through the resource `(1/√d) Σ_i |i⟩|i⟩` on factors (2,3),
/// conditioned on the Weyl outcome `(k, l)` on factors (1,2).
pub fn teleport(phi: &[Complex64], outcome: (usize, usize)) -> Result<TeleportRun> {
    teleport_via(phi, outcome, &Isometry::identity(phi.len()))
}

/// As [`teleport`], with the (2,3) resource given by the isometry `I₂₃`.
///
/// The map from factor 1 to factor 3 is simulated column by column and checked
/// against `I₁₃ = I₂₃ · Ī₁₂`, where `I₁₂ = W_kl` is the outcome's isometry.
/// With the identity resource the correction is `W̄_kl = W_{k,−l}`.
pub fn teleport_via(
    phi: &[Complex64],
    outcome: (usize, usize),
    resource: &Isometry,
) -> Result<TeleportRun> {
    let d = resource.d();
    if phi.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: phi.len(),
        });
    }
    ensure_normalized(phi, DEFAULT_TOL)?;
    check_label(outcome, d)?;

    let i12 = Isometry::weyl(outcome.0, outcome.1, d)?;
    let chi = maxent_from_isometry(&i12);
    let psi23 = maxent_from_isometry(resource);

    // Effective factor-1 → factor-3 map, scaled so that it is unitary.
    let scale = Complex64::new(d as f64, 0.0);
    let columns: Vec<StateVector> = (0..d)
        .map(|i| {
            project_first_pair(&basis_vector(d, i), &psi23, &chi)
                .into_iter()
                .map(|z| z * scale)
                .collect()
        })
        .collect();
    let simulated = crate::linalg::ComplexMatrix::from_fn(d, |r, c| columns[c][r]);
    let i13 = Isometry::new(simulated).map_err(|e| {
        Error::Assertion(format!("outcome {outcome:?}: simulated map is not unitary: {e}"))
    })?;
    let predicted = resource.compose(&i12.conj())?;
    let composition_error = i13.phase_distance(&predicted)?;
    if composition_error > PROTOCOL_TOL {
        return Err(Error::Assertion(format!(
            "outcome {outcome:?}: I13 differs from I23 · conj(I12) by {composition_error:e}"
        )));
    }

    let raw = project_first_pair(phi, &psi23, &chi);
    let probability = norm(&raw).powi(2);
    let bob: StateVector = raw.iter().map(|z| z / probability.sqrt()).collect();
    let recovered = predicted.inverse().apply(&bob)?;
    let fidelity = inner(phi, &recovered).norm();
    if (fidelity - 1.0).abs() > PROTOCOL_TOL {
        return Err(Error::Assertion(format!(
            "outcome {outcome:?}: recovery fidelity {fidelity}"
        )));
    }
    Ok(TeleportRun {
        outcome: BellMeasurementOutcome {
            index: outcome,
            probability,
            post_state: bob,
        },
        correction: predicted,
        fidelity,
    })
}

/// Runs [`teleport`] for all `d²` outcomes in label order.
pub fn teleport_all(phi: &[Complex64]) -> Result<Vec<TeleportRun>> {
    let d = phi.len();
    (0..d)
        .flat_map(|k| (0..d).map(move |l| (k, l)))
        .map(|o| teleport(phi, o))
        .collect()
}
