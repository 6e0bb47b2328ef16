//! Tensor-product bookkeeping for a split `C^{d1} ⊗ C^{d2}`.
//!
//! A composite index is `i1 * d2 + i2`, so the second factor runs fastest.

use num_complex::Complex64;

use super::eigen::herm_eigensystem_tol;
use super::matrix::ComplexMatrix;
use super::vector::{complete_orthonormal_basis, ensure_normalized, kron_vec, StateVector};
use crate::error::{Error, Result};
use crate::DEFAULT_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    First,
    Second,
}

pub fn check_split(dim: usize, (d1, d2): (usize, usize)) -> Result<()> {
    if d1 == 0 || d2 == 0 || d1 * d2 != dim {
        return Err(Error::SplitMismatch { dim, d1, d2 });
    }
    Ok(())
}

/// Transposes the indices of one tensor factor.
pub fn partial_transpose(
    m: &ComplexMatrix,
    split: (usize, usize),
    side: Side,
) -> Result<ComplexMatrix> {
    check_split(m.dim(), split)?;
    let (d1, d2) = split;
    let mut out = ComplexMatrix::zeros(m.dim());
    for i1 in 0..d1 {
        for i2 in 0..d2 {
            for j1 in 0..d1 {
                for j2 in 0..d2 {
                    let (a1, b1, a2, b2) = match side {
                        Side::First => (j1, i1, i2, j2),
                        Side::Second => (i1, j1, j2, i2),
                    };
                    out[(i1 * d2 + i2, j1 * d2 + j2)] = m[(a1 * d2 + a2, b1 * d2 + b2)];
                }
            }
        }
    }
    Ok(out)
}

/// Reduced matrix on the kept factor.
pub fn partial_trace(
    m: &ComplexMatrix,
    split: (usize, usize),
    keep: Side,
) -> Result<ComplexMatrix> {
    check_split(m.dim(), split)?;
    let (d1, d2) = split;
    let out = match keep {
        Side::First => ComplexMatrix::from_fn(d1, |i, j| {
            (0..d2).map(|k| m[(i * d2 + k, j * d2 + k)]).sum()
        }),
        Side::Second => ComplexMatrix::from_fn(d2, |i, j| {
            (0..d1).map(|k| m[(k * d2 + i, k * d2 + j)]).sum()
        }),
    };
    Ok(out)
}

/// Reduced density matrix of a multipartite pure vector on the factors listed
/// in `keep` (in increasing order).
pub fn reduced_state(v: &[Complex64], dims: &[usize], keep: &[usize]) -> Result<ComplexMatrix> {
    let total: usize = dims.iter().product();
    if v.len() != total {
        return Err(Error::DimensionMismatch {
            expected: total,
            found: v.len(),
        });
    }
    if keep.windows(2).any(|w| w[0] >= w[1]) || keep.iter().any(|&k| k >= dims.len()) {
        return Err(Error::Malformed(format!(
            "factor list {keep:?} must be increasing and below {}",
            dims.len()
        )));
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|k| !keep.contains(k)).collect();
    let kept_dim: usize = keep.iter().map(|&k| dims[k]).product();
    let traced_dim: usize = traced.iter().map(|&k| dims[k]).product();

    let compose = |kept_idx: usize, traced_idx: usize| -> usize {
        let mut digits = vec![0usize; dims.len()];
        let mut rest = kept_idx;
        for &k in keep.iter().rev() {
            digits[k] = rest % dims[k];
            rest /= dims[k];
        }
        let mut rest = traced_idx;
        for &k in traced.iter().rev() {
            digits[k] = rest % dims[k];
            rest /= dims[k];
        }
        digits
            .iter()
            .zip(dims)
            .fold(0, |acc, (&digit, &d)| acc * d + digit)
    };

    let mut out = ComplexMatrix::zeros(kept_dim);
    for t in 0..traced_dim {
        let column: Vec<Complex64> = (0..kept_dim).map(|i| v[compose(i, t)]).collect();
        for i in 0..kept_dim {
            for j in 0..kept_dim {
                out[(i, j)] += column[i] * column[j].conj();
            }
        }
    }
    Ok(out)
}

/// `v = Σ_k c_k |left_k⟩ ⊗ |right_k⟩`.
///
/// `coefficients` has `min(d1, d2)` entries in descending order. Both bases are
/// complete orthonormal bases of their factor; the first `min(d1, d2)` vectors
/// pair up with the coefficients.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    pub coefficients: Vec<f64>,
    pub left_basis: Vec<StateVector>,
    pub right_basis: Vec<StateVector>,
    pub split: (usize, usize),
}

impl SchmidtDecomposition {
    /// Number of coefficients above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.coefficients.iter().filter(|&&c| c > tol).count()
    }

    pub fn reconstruct(&self) -> StateVector {
        let (d1, d2) = self.split;
        let mut v = vec![Complex64::new(0.0, 0.0); d1 * d2];
        for (k, &c) in self.coefficients.iter().enumerate() {
            let term = kron_vec(&self.left_basis[k], &self.right_basis[k]);
            for (x, y) in v.iter_mut().zip(term) {
                *x += y * c;
            }
        }
        v
    }

    /// Von Neumann entropy (natural log) of either reduced state.
    pub fn entanglement_entropy(&self) -> f64 {
        self.coefficients
            .iter()
            .map(|c| c * c)
            .filter(|&p| p > 0.0)
            .map(|p| -p * p.ln())
            .sum()
    }
}

pub fn schmidt_decompose(v: &[Complex64], split: (usize, usize)) -> Result<SchmidtDecomposition> {
    schmidt_decompose_tol(v, split, DEFAULT_TOL)
}

/// Schmidt decomposition from the eigensystem of the Gram matrix `M M†`,
/// where `M[i][j] = v[i * d2 + j]`.
pub fn schmidt_decompose_tol(
    v: &[Complex64],
    split: (usize, usize),
    tol: f64,
) -> Result<SchmidtDecomposition> {
    check_split(v.len(), split)?;
    ensure_normalized(v, tol)?;
    let (d1, d2) = split;
    let m = |i: usize, j: usize| v[i * d2 + j];
    let gram = ComplexMatrix::from_fn(d1, |i, k| (0..d2).map(|j| m(i, j) * m(k, j).conj()).sum());
    let spec = herm_eigensystem_tol(&gram, tol)?;
    let r = d1.min(d2);

    let mut coefficients = Vec::with_capacity(r);
    let mut right_seeds: Vec<StateVector> = Vec::with_capacity(r);
    for u in spec.vectors.iter().take(r) {
        // right_k = M^T conj(u_k) / c_k
        let row: StateVector = (0..d2)
            .map(|j| (0..d1).map(|i| u[i].conj() * m(i, j)).sum())
            .collect();
        let c = super::vector::norm(&row);
        coefficients.push(c);
        if c > 1e-12 {
            right_seeds.push(row.into_iter().map(|z| z / c).collect());
        } else {
            break;
        }
    }
    // coefficients below the cutoff still need a slot each
    while coefficients.len() < r {
        coefficients.push(0.0);
    }
    let right_basis = complete_orthonormal_basis(&right_seeds, d2);
    Ok(SchmidtDecomposition {
        coefficients,
        left_basis: spec.vectors,
        right_basis,
        split,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector::{basis_vector, inner, norm};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn singlet() -> StateVector {
        let s = 0.5f64.sqrt();
        vec![c(0.0, 0.0), c(s, 0.0), c(-s, 0.0), c(0.0, 0.0)]
    }

    #[test]
    fn partial_transpose_of_singlet_has_negative_half() {
        let rho = ComplexMatrix::outer(&singlet());
        let pt = partial_transpose(&rho, (2, 2), Side::Second).unwrap();
        let spec = herm_eigensystem_tol(&pt, 1e-12).unwrap();
        assert!((spec.min() + 0.5).abs() < 1e-12);
        let back = partial_transpose(&pt, (2, 2), Side::Second).unwrap();
        assert!(back.max_abs_diff(&rho) < 1e-15);
    }

    #[test]
    fn partial_trace_of_singlet_is_maximally_mixed() {
        let rho = ComplexMatrix::outer(&singlet());
        let half = ComplexMatrix::identity(2).scale_real(0.5);
        for side in [Side::First, Side::Second] {
            let red = partial_trace(&rho, (2, 2), side).unwrap();
            assert!(red.max_abs_diff(&half) < 1e-15);
        }
    }

    #[test]
    fn partial_trace_of_asymmetric_product() {
        let a = ComplexMatrix::from_real_diagonal(&[0.2, 0.8]);
        let b = ComplexMatrix::from_real_diagonal(&[0.5, 0.3, 0.2]);
        let ab = a.kron(&b);
        assert!(partial_trace(&ab, (2, 3), Side::First).unwrap().max_abs_diff(&a) < 1e-15);
        assert!(partial_trace(&ab, (2, 3), Side::Second).unwrap().max_abs_diff(&b) < 1e-15);
    }

    #[test]
    fn split_is_validated() {
        let m = ComplexMatrix::identity(4);
        assert!(matches!(
            partial_trace(&m, (3, 2), Side::First),
            Err(Error::SplitMismatch { .. })
        ));
    }

    #[test]
    fn schmidt_of_product_and_singlet() {
        let up_down = kron_vec(&basis_vector(2, 0), &basis_vector(2, 1));
        let sd = schmidt_decompose(&up_down, (2, 2)).unwrap();
        assert!((sd.coefficients[0] - 1.0).abs() < 1e-15);
        assert!(sd.coefficients[1].abs() < 1e-15);

        let sd = schmidt_decompose(&singlet(), (2, 2)).unwrap();
        for &x in &sd.coefficients {
            assert!((x - 0.5f64.sqrt()).abs() < 1e-12);
        }
        let back = sd.reconstruct();
        let diff: Vec<_> = back.iter().zip(singlet()).map(|(a, b)| a - b).collect();
        assert!(norm(&diff) < 1e-12);
    }

    #[test]
    fn schmidt_rectangular_split() {
        let v: StateVector = (0..6).map(|k| c((k as f64).cos(), (k as f64 * 0.7).sin())).collect();
        let v = crate::linalg::normalized(&v).unwrap();
        let sd = schmidt_decompose(&v, (3, 2)).unwrap();
        assert_eq!(sd.coefficients.len(), 2);
        let back = sd.reconstruct();
        let diff: Vec<_> = back.iter().zip(&v).map(|(a, b)| a - b).collect();
        assert!(norm(&diff) < 1e-10);
        assert_eq!(sd.left_basis.len(), 3);
        assert_eq!(sd.right_basis.len(), 2);
        assert!(inner(&sd.right_basis[0], &sd.right_basis[1]).norm() < 1e-12);
    }

    #[test]
    fn reduced_state_of_three_qubits() {
        // (|000⟩ + |111⟩)/√2 traced down to factors 0 and 2
        let s = 0.5f64.sqrt();
        let mut v = vec![c(0.0, 0.0); 8];
        v[0] = c(s, 0.0);
        v[7] = c(s, 0.0);
        let red = reduced_state(&v, &[2, 2, 2], &[0, 2]).unwrap();
        let expected = ComplexMatrix::from_real_diagonal(&[0.5, 0.0, 0.0, 0.5]);
        assert!(red.max_abs_diff(&expected) < 1e-15);
    }
}
