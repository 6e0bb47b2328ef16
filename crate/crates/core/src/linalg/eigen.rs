//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::vector::StateVector;
use crate::error::{Error, Result};
use crate::DEFAULT_TOL;

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TARGET: f64 = 1e-12;

/// Real spectrum sorted descending with matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub vectors: Vec<StateVector>,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        *self.values.last().expect("spectrum is never empty")
    }

    /// `V Λ V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_values(|x| x)
    }

    /// `V f(Λ) V†`.
    pub fn map_values(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.dim();
        let mut out = ComplexMatrix::zeros(n);
        for (&lam, v) in self.values.iter().zip(&self.vectors) {
            let w = f(lam);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vi = v[i] * w;
                for j in 0..n {
                    out[(i, j)] += vi * v[j].conj();
                }
            }
        }
        out
    }
}

/// Full eigensystem of a Hermitian matrix (Hermiticity checked at the
/// default tolerance).
pub fn herm_eigensystem(m: &ComplexMatrix) -> Result<Spectrum> {
    herm_eigensystem_tol(m, DEFAULT_TOL)
}

pub fn herm_eigensystem_tol(m: &ComplexMatrix, tol: f64) -> Result<Spectrum> {
    let deviation = m.hermiticity_deviation();
    if deviation > tol {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(jacobi(m.hermitian_part()))
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi(mut a: ComplexMatrix) -> Spectrum {
    let n = a.dim();
    let mut v = ComplexMatrix::identity(n);
    let target = OFF_DIAGONAL_TARGET * a.frobenius_norm().max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) < target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut pairs: Vec<(f64, StateVector)> =
        (0..n).map(|k| (a[(k, k)].re, v.column(k))).collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    let (values, vectors) = pairs.into_iter().unzip();
    Spectrum { values, vectors }
}

/// Annihilates the (p, q) entry with `G = D R`, where `D = diag(1, e^{-iφ})`
/// removes the phase of `a_pq` and `R` is the real Jacobi rotation.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let scale = app.abs().max(aqq.abs()).max(f64::MIN_POSITIVE);
    if b <= 1e-300 || b < 1e-18 * scale {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    let phase = apq / b;
    let theta = (aqq - app) / (2.0 * b);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let t = if theta == 0.0 { 1.0 } else { t };
    let cs = 1.0 / (t * t + 1.0).sqrt();
    let sn = t * cs;
    let e_minus = phase.conj();

    let n = a.dim();
    // A <- A G and V <- V G
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * cs - akq * e_minus * sn;
        a[(k, q)] = akp * sn + akq * e_minus * cs;
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * cs - vkq * e_minus * sn;
        v[(k, q)] = vkp * sn + vkq * e_minus * cs;
    }
    // A <- G† A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * cs - aqk * phase * sn;
        a[(q, k)] = apk * sn + aqk * phase * cs;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

/// Positive semidefinite square root; eigenvalues in `[-tol, 0)` are treated
/// as zero.
pub fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    psd_sqrt_tol(m, DEFAULT_TOL)
}

pub fn psd_sqrt_tol(m: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    let spec = herm_eigensystem_tol(m, tol)?;
    if spec.min() < -tol {
        return Err(Error::NotPsd {
            min_eigenvalue: spec.min(),
        });
    }
    Ok(spec.map_values(|x| x.max(0.0).sqrt()))
}
