//! Constructive factorization switches for pure and mixed states.

use num_complex::Complex64;

use super::switch::FactorizationSwitch;
use crate::error::{Error, Result};
use crate::linalg::{
    basis_vector, check_split, complete_orthonormal_basis, ensure_normalized, kron_vec,
    schmidt_decompose, StateVector,
};
use crate::measures::{ppt_check, PptVerdict};
use crate::states::{weyl_basis_state, DensityMatrix};
use crate::DEFAULT_TOL;

type AdaptedBasis = (Vec<StateVector>, Vec<(usize, usize)>);

/// Source basis adapted to `ψ = Σ_k c_k l_k⊗r_k`: first an orthonormal basis of
/// the diagonal span `{l_k⊗r_k}` that starts with `ψ`, then the cross products
/// `l_i⊗r_j`, `i ≠ j`, in lexicographic order (with the pair index they occupy).
fn schmidt_adapted_basis(
    psi: &[Complex64],
    split: (usize, usize),
) -> Result<AdaptedBasis> {
    let sd = schmidt_decompose(psi, split)?;
    let (d1, d2) = split;
    let m = d1.min(d2);
    let diagonal: Vec<StateVector> = (0..m)
        .map(|k| kron_vec(&sd.left_basis[k], &sd.right_basis[k]))
        .collect();
    let mut seeds = vec![psi.to_vec()];
    seeds.extend(diagonal.into_iter().skip(1));
    // c_0 > 0 keeps the seeds independent; the completion only guards rounding
    let mut sources = complete_orthonormal_basis(&seeds, d1 * d2);
    sources.truncate(m);
    let mut cross = Vec::new();
    for i in 0..d1 {
        for j in 0..d2 {
            if i != j {
                sources.push(kron_vec(&sd.left_basis[i], &sd.right_basis[j]));
                cross.push((i, j));
            }
        }
    }
    Ok((sources, cross))
}

fn product_target(i: usize, j: usize, split: (usize, usize)) -> StateVector {
    kron_vec(&basis_vector(split.0, i), &basis_vector(split.1, j))
}

/// A unitary with `Uψ = |0⟩⊗|0⟩`, so `ψ` is a product vector in the new
/// factorization.
pub fn pure_to_product(psi: &[Complex64], split: (usize, usize)) -> Result<FactorizationSwitch> {
    check_split(psi.len(), split)?;
    ensure_normalized(psi, DEFAULT_TOL)?;
    let (sources, cross) = schmidt_adapted_basis(psi, split)?;
    let m = split.0.min(split.1);
    let mut targets: Vec<StateVector> = (0..m).map(|k| product_target(k, k, split)).collect();
    targets.extend(cross.iter().map(|&(i, j)| product_target(i, j, split)));
    FactorizationSwitch::from_basis_map(&sources, &targets, split, "pure state to |00>")
}

/// A unitary with `Uψ = (1/√d) Σ_k |k⟩⊗|k⟩` on a `d × d` split.
pub fn pure_to_maxent(psi: &[Complex64], split: (usize, usize)) -> Result<FactorizationSwitch> {
    check_split(psi.len(), split)?;
    let (d1, d2) = split;
    if d1 != d2 {
        return Err(Error::WrongSplit {
            expected: (d1, d1),
            found: split,
        });
    }
    ensure_normalized(psi, DEFAULT_TOL)?;
    let (sources, cross) = schmidt_adapted_basis(psi, split)?;
    let d = d1;
    let norm = 1.0 / (d as f64).sqrt();
    let mut phi = vec![Complex64::new(0.0, 0.0); d * d];
    for k in 0..d {
        phi[k * d + k] = Complex64::new(norm, 0.0);
    }
    let mut seeds = vec![phi];
    seeds.extend((1..d).map(|k| product_target(k, k, split)));
    let mut targets = complete_orthonormal_basis(&seeds, d * d);
    targets.truncate(d);
    targets.extend(cross.iter().map(|&(i, j)| product_target(i, j, split)));
    FactorizationSwitch::from_basis_map(&sources, &targets, split, "pure state to maximally entangled")
}

/// Maps the `α`-th eigenvector of `ρ` to the product basis vector
/// `|α / d2⟩⊗|α mod d2⟩`; the result is diagonal in the product basis and
/// hence separable.
pub fn separabilize(rho: &DensityMatrix) -> Result<FactorizationSwitch> {
    let split = rho.split();
    let spec = rho.spectrum();
    let targets: Vec<StateVector> = (0..rho.dim())
        .map(|a| product_target(a / split.1, a % split.1, split))
        .collect();
    FactorizationSwitch::from_basis_map(&spec.vectors, &targets, split, "eigenbasis to product basis")
}

/// Maps the `α`-th eigenvector of `ρ` to the Weyl state `χ_{α/d, α mod d}`;
/// the result is a Weyl-diagonal state.
pub fn weylize(rho: &DensityMatrix) -> Result<FactorizationSwitch> {
    let d = rho.square_split()?;
    let spec = rho.spectrum();
    let targets = (0..d * d)
        .map(|a| weyl_basis_state(a / d, a % d, d))
        .collect::<Result<Vec<_>>>()?;
    FactorizationSwitch::from_basis_map(&spec.vectors, &targets, (d, d), "eigenbasis to Weyl basis")
}

/// Result of the spectral entangling construction.
#[derive(Debug, Clone)]
pub enum ConstrainedOutcome {
    Entangling {
        switch: FactorizationSwitch,
        /// `ρ_{D−2} ρ_D < ¼(ρ₁ − ρ_{D−1})²` in 1-based descending ranks,
        /// which decides NPT for this construction.
        predictor_npt: bool,
        verdict: PptVerdict,
    },
    NotApplicable {
        largest_eigenvalue: f64,
        bound: f64,
    },
}

impl ConstrainedOutcome {
    pub fn switch(&self) -> Option<&FactorizationSwitch> {
        match self {
            ConstrainedOutcome::Entangling { switch, .. } => Some(switch),
            ConstrainedOutcome::NotApplicable { .. } => None,
        }
    }
}

/// If the largest eigenvalue exceeds `3/d²`, rotates the eigenbasis so that
/// the output is NPT:
///
/// | eigenvector (0-based, descending) | target |
/// |---|---|
/// | `0` | `(|00⟩ + |11⟩)/√2` |
/// | `D−3` | `|01⟩` |
/// | `D−2` | `(|00⟩ − |11⟩)/√2` |
/// | `D−1` | `|10⟩` |
/// | the rest, in order | remaining product vectors, lexicographic |
///
/// The partial transpose then holds the block
/// `[[ρ_{D−3}, ½(ρ₀ − ρ_{D−2})], [½(ρ₀ − ρ_{D−2}), ρ_{D−1}]]`, whose determinant
/// is negative whenever `ρ₀ > 3/d²`.
pub fn constrained_entangle(rho: &DensityMatrix) -> Result<ConstrainedOutcome> {
    let d = rho.square_split()?;
    let n = d * d;
    let bound = 3.0 / n as f64;
    let spec = rho.spectrum();
    let p = &spec.values;
    if d < 2 || p[0] <= bound {
        return Ok(ConstrainedOutcome::NotApplicable {
            largest_eigenvalue: p[0],
            bound,
        });
    }

    let split = (d, d);
    let s = 0.5f64.sqrt();
    let e = |i: usize, j: usize| product_target(i, j, split);
    let combine = |sign: f64| -> StateVector {
        e(0, 0)
            .iter()
            .zip(e(1, 1))
            .map(|(a, b)| (a + b * sign) * s)
            .collect()
    };
    let mut rest = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .filter(|&(i, j)| i > 1 || j > 1);
    let targets: Vec<StateVector> = (0..n)
        .map(|a| match a {
            0 => combine(1.0),
            _ if a == n - 3 => e(0, 1),
            _ if a == n - 2 => combine(-1.0),
            _ if a == n - 1 => e(1, 0),
            _ => {
                let (i, j) = rest.next().expect("enough product vectors remain");
                e(i, j)
            }
        })
        .collect();
    let switch = FactorizationSwitch::from_basis_map(&spec.vectors, &targets, split, "constrained entangler")?;

    let predictor_npt = p[n - 3] * p[n - 1] < 0.25 * (p[0] - p[n - 2]).powi(2);
    let verdict = ppt_check(&super::conjugate(rho, &switch)?);
    Ok(ConstrainedOutcome::Entangling {
        switch,
        predictor_npt,
        verdict,
    })
}

/// For a pure state on `C^d ⊗ C^d ⊗ C^d`, a unitary on the first two factors
/// that moves all correlations with factor 3 into factor 1: with
/// `Ω = Σ_i c_i φ_i ⊗ ψ_i` across `(12 | 3)`, it maps `φ_i ↦ |i⟩|0⟩` and the
/// remaining basis of `C^{d²}` to `|i⟩|j ≥ 1⟩` in order. Afterwards factor 2
/// is in `|0⟩` and the (1,3) pair carries the full entropy of factor 3.
pub fn ghz_split_unitary(omega: &[Complex64], d: usize) -> Result<FactorizationSwitch> {
    let dd = d * d;
    if omega.len() != dd * d {
        return Err(Error::DimensionMismatch {
            expected: dd * d,
            found: omega.len(),
        });
    }
    ensure_normalized(omega, DEFAULT_TOL)?;
    let sd = schmidt_decompose(omega, (dd, d))?;
    let split = (d, d);
    let targets: Vec<StateVector> = (0..d)
        .map(|i| product_target(i, 0, split))
        .chain((0..d).flat_map(|i| (1..d).map(move |j| (i, j))).map(|(i, j)| product_target(i, j, split)))
        .collect();
    FactorizationSwitch::from_basis_map(&sd.left_basis, &targets, split, "tripartite splitting unitary")
}

/// `(U ⊗ 𝟙_d) Ω` for a unitary on the first two of three factors.
pub fn apply_on_first_pair(s: &FactorizationSwitch, omega: &[Complex64], d3: usize) -> Result<StateVector> {
    let n = s.unitary().dim();
    if omega.len() != n * d3 {
        return Err(Error::DimensionMismatch {
            expected: n * d3,
            found: omega.len(),
        });
    }
    let u = s.unitary();
    let mut out = vec![Complex64::new(0.0, 0.0); omega.len()];
    for a in 0..n {
        for b in 0..n {
            let w = u[(a, b)];
            if w == Complex64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..d3 {
                out[a * d3 + k] += w * omega[b * d3 + k];
            }
        }
    }
    Ok(out)
}
