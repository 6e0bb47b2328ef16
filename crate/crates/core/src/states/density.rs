use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    check_split, ensure_normalized, herm_eigensystem_tol, ComplexMatrix, Spectrum,
};
use crate::DEFAULT_TOL;

/// A validated quantum state on `C^{d1} ⊗ C^{d2}`.
///
/// Construction checks Hermiticity, unit trace and positivity (eigenvalues
/// `>= -tol`). The stored matrix is the exact Hermitian part of the input.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    split: (usize, usize),
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix, split: (usize, usize)) -> Result<Self> {
        Self::with_tol(matrix, split, DEFAULT_TOL)
    }

    pub fn with_tol(matrix: ComplexMatrix, split: (usize, usize), tol: f64) -> Result<Self> {
        check_split(matrix.dim(), split)?;
        let deviation = matrix.hermiticity_deviation();
        if deviation > tol {
            return Err(Error::NotHermitian { deviation });
        }
        let matrix = matrix.hermitian_part();
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > tol {
            return Err(Error::TraceNotOne { trace });
        }
        let min_eigenvalue = herm_eigensystem_tol(&matrix, tol)?.min();
        if min_eigenvalue < -tol {
            return Err(Error::NotPsd { min_eigenvalue });
        }
        Ok(Self { matrix, split })
    }

    /// `|v⟩⟨v|` for a normalized vector.
    pub fn from_pure(v: &[Complex64], split: (usize, usize)) -> Result<Self> {
        check_split(v.len(), split)?;
        ensure_normalized(v, DEFAULT_TOL)?;
        Ok(Self {
            matrix: ComplexMatrix::outer(v),
            split,
        })
    }

    /// Skips validation; for matrices that are states by construction.
    pub(crate) fn trusted(matrix: ComplexMatrix, split: (usize, usize)) -> Self {
        debug_assert_eq!(matrix.dim(), split.0 * split.1);
        Self {
            matrix: matrix.hermitian_part(),
            split,
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn split(&self) -> (usize, usize) {
        self.split
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn spectrum(&self) -> Spectrum {
        herm_eigensystem_tol(&self.matrix, f64::INFINITY).expect("state matrix is Hermitian")
    }

    /// Requires the given split, as most two-qubit measures do.
    pub fn expect_split(&self, expected: (usize, usize)) -> Result<()> {
        if self.split != expected {
            return Err(Error::WrongSplit {
                expected,
                found: self.split,
            });
        }
        Ok(())
    }

    /// Requires `d1 == d2` and returns `d`.
    pub fn square_split(&self) -> Result<usize> {
        let (d1, d2) = self.split;
        if d1 != d2 {
            return Err(Error::WrongSplit {
                expected: (d1, d1),
                found: self.split,
            });
        }
        Ok(d1)
    }
}

impl AsRef<ComplexMatrix> for DensityMatrix {
    fn as_ref(&self) -> &ComplexMatrix {
        &self.matrix
    }
}
