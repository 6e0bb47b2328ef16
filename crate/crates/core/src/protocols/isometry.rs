use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{phase_distance, schmidt_decompose, ComplexMatrix, StateVector};

/// Unitarity tolerance for isometries.
pub const ISOMETRY_TOL: f64 = 1e-10;

/// Schmidt coefficient tolerance when reading an isometry off a vector.
pub const MAXENT_TOL: f64 = 1e-8;

/// A unitary identification `I` between two `d`-dimensional factors. It
/// corresponds to the maximally entangled vector `(1/√d) Σ_i |i⟩⊗|I i⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct Isometry {
    map: ComplexMatrix,
}

impl Isometry {
    pub fn new(map: ComplexMatrix) -> Result<Self> {
        if map.dim() == 0 {
            return Err(Error::Malformed("isometry of dimension 0".into()));
        }
        let deviation = map.unitarity_deviation();
        if deviation > ISOMETRY_TOL {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self { map })
    }

    pub fn identity(d: usize) -> Self {
        Self {
            map: ComplexMatrix::identity(d),
        }
    }

    /// The Weyl operator `W_kl` with `W_kl |j⟩ = ω^{jl} |j+k⟩`.
    pub fn weyl(k: usize, l: usize, d: usize) -> Result<Self> {
        Ok(Self {
            map: weyl_operator(k, l, d)?,
        })
    }

    pub fn d(&self) -> usize {
        self.map.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.map
    }

    /// `self · other`, applying `other` first.
    pub fn compose(&self, other: &Isometry) -> Result<Isometry> {
        self.check_same_dim(other)?;
        Ok(Self {
            map: self.map.matmul(&other.map),
        })
    }

    pub fn inverse(&self) -> Isometry {
        Self {
            map: self.map.adjoint(),
        }
    }

    /// Complex conjugate in the computational basis.
    pub fn conj(&self) -> Isometry {
        Self {
            map: self.map.conj(),
        }
    }

    pub fn apply(&self, v: &[Complex64]) -> Result<StateVector> {
        if v.len() != self.d() {
            return Err(Error::DimensionMismatch {
                expected: self.d(),
                found: v.len(),
            });
        }
        Ok(self.map.apply(v))
    }

    /// Largest entrywise deviation from `other` after removing one global
    /// phase, taken from the largest-magnitude entry of `other`.
    pub fn phase_distance(&self, other: &Isometry) -> Result<f64> {
        self.check_same_dim(other)?;
        Ok(phase_distance(self.map.as_slice(), other.map.as_slice()))
    }

    /// Weyl label `(k, l)` of this operator up to phase, if it is one.
    pub fn weyl_label(&self, tol: f64) -> Option<(usize, usize)> {
        let d = self.d();
        (0..d)
            .flat_map(|k| (0..d).map(move |l| (k, l)))
            .find(|&(k, l)| {
                let w = Isometry::weyl(k, l, d).expect("label in range");
                phase_distance(self.map.as_slice(), w.map.as_slice()) <= tol
            })
    }

    fn check_same_dim(&self, other: &Isometry) -> Result<()> {
        if self.d() != other.d() {
            return Err(Error::DimensionMismatch {
                expected: self.d(),
                found: other.d(),
            });
        }
        Ok(())
    }
}

/// `W_kl` as a matrix: `W[(j+k) mod d, j] = e^{2πi jl/d}`.
pub fn weyl_operator(k: usize, l: usize, d: usize) -> Result<ComplexMatrix> {
    if d == 0 || k >= d || l >= d {
        return Err(Error::IndexOutOfRange { k, l, d });
    }
    let mut m = ComplexMatrix::zeros(d);
    for j in 0..d {
        let phase = 2.0 * PI * ((j * l) % d) as f64 / d as f64;
        m[((j + k) % d, j)] = Complex64::from_polar(1.0, phase);
    }
    Ok(m)
}

/// `(1/√d) Σ_i |i⟩⊗|I i⟩`, so the coefficient matrix is `Iᵀ/√d`.
pub fn maxent_from_isometry(i: &Isometry) -> StateVector {
    let d = i.d();
    let s = 1.0 / (d as f64).sqrt();
    let mut v = vec![Complex64::new(0.0, 0.0); d * d];
    for a in 0..d {
        for b in 0..d {
            v[a * d + b] = i.map[(b, a)] * s;
        }
    }
    v
}

/// Inverse of [`maxent_from_isometry`]: `I = √d Mᵀ` for the coefficient
/// matrix `M`. The vector must be maximally entangled across `(d, d)`.
pub fn isometry_of_maxent(v: &[Complex64], d: usize) -> Result<Isometry> {
    let sd = schmidt_decompose(v, (d, d))?;
    let target = 1.0 / (d as f64).sqrt();
    if sd.coefficients.iter().any(|c| (c - target).abs() > MAXENT_TOL) {
        return Err(Error::NotMaximallyEntangled {
            coefficients: sd.coefficients,
        });
    }
    let s = (d as f64).sqrt();
    let map = ComplexMatrix::from_fn(d, |b, a| v[a * d + b] * s);
    Isometry::new(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::equal_up_to_phase;
    use crate::random::{random_unitary, seeded};
    use crate::states::{weyl_basis_state, BellState};

    #[test]
    fn identity_gives_phi_plus_and_its_qutrit_analogue() {
        let v = maxent_from_isometry(&Isometry::identity(2));
        assert!(equal_up_to_phase(&v, &BellState::PhiPlus.vector(), 1e-15));
        let v3 = maxent_from_isometry(&Isometry::identity(3));
        let s = 1.0 / 3f64.sqrt();
        for (i, z) in v3.iter().enumerate() {
            let expected = if i % 4 == 0 { s } else { 0.0 };
            assert!((z - expected).norm() < 1e-15);
        }
    }

    #[test]
    fn weyl_isometries_give_weyl_states() {
        for d in 2..=4 {
            for k in 0..d {
                for l in 0..d {
                    let v = maxent_from_isometry(&Isometry::weyl(k, l, d).unwrap());
                    let chi = weyl_basis_state(k, l, d).unwrap();
                    let diff = v.iter().zip(&chi).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
                    assert!(diff < 1e-15);
                    let back = isometry_of_maxent(&chi, d).unwrap();
                    assert_eq!(back.weyl_label(1e-12), Some((k, l)));
                }
            }
        }
    }

    #[test]
    fn round_trip_random_unitaries() {
        let mut rng = seeded(3);
        for d in 2..=4 {
            let i = Isometry::new(random_unitary(&mut rng, d)).unwrap();
            let back = isometry_of_maxent(&maxent_from_isometry(&i), d).unwrap();
            assert!(back.phase_distance(&i).unwrap() < 1e-12);
        }
    }

    #[test]
    fn rejects_partial_entanglement() {
        let v = crate::states::psi_theta(0.3);
        assert!(matches!(
            isometry_of_maxent(&v, 2),
            Err(Error::NotMaximallyEntangled { .. })
        ));
        assert!(Isometry::new(ComplexMatrix::identity(2).scale_real(0.5)).is_err());
    }
}
