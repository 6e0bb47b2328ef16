//! Helpers for state vectors stored as `Vec<Complex64>`.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type StateVector = Vec<Complex64>;

/// `<a|b>`, conjugate-linear in the first argument.
pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    assert_eq!(a.len(), b.len(), "inner product of unequal lengths");
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn normalized(v: &[Complex64]) -> Result<StateVector> {
    let n = norm(v);
    if n == 0.0 || !n.is_finite() {
        return Err(Error::NotNormalized { norm: n });
    }
    Ok(v.iter().map(|z| z / n).collect())
}

pub fn ensure_normalized(v: &[Complex64], tol: f64) -> Result<()> {
    let n = norm(v);
    if (n - 1.0).abs() > tol {
        return Err(Error::NotNormalized { norm: n });
    }
    Ok(())
}

pub fn basis_vector(dim: usize, index: usize) -> StateVector {
    let mut v = vec![Complex64::new(0.0, 0.0); dim];
    v[index] = Complex64::new(1.0, 0.0);
    v
}

/// `a ⊗ b` with the index of `b` running fastest.
pub fn kron_vec(a: &[Complex64], b: &[Complex64]) -> StateVector {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

pub fn scale(v: &[Complex64], s: Complex64) -> StateVector {
    v.iter().map(|z| z * s).collect()
}

fn project_out(v: &mut [Complex64], basis: &[StateVector]) {
    // two passes of classical Gram-Schmidt keep orthogonality at machine precision
    for _ in 0..2 {
        for b in basis {
            let c = inner(b, v);
            for (x, y) in v.iter_mut().zip(b) {
                *x -= c * y;
            }
        }
    }
}

/// Orthonormalizes `seeds` in order and extends them to an orthonormal basis
/// of `C^dim` with the standard basis vectors that are least aligned with
/// the span built so far.
///
/// Seeds whose residual norm after projection drops below `1e-10` are
/// treated as dependent and skipped.
pub fn complete_orthonormal_basis(seeds: &[StateVector], dim: usize) -> Vec<StateVector> {
    let mut basis: Vec<StateVector> = Vec::with_capacity(dim);
    for s in seeds {
        assert_eq!(s.len(), dim, "seed vector has wrong length");
        if basis.len() == dim {
            break;
        }
        let mut v = s.clone();
        project_out(&mut v, &basis);
        let n = norm(&v);
        if n > 1e-10 {
            basis.push(v.into_iter().map(|z| z / n).collect());
        }
    }
    while basis.len() < dim {
        let mut best: Option<(f64, StateVector)> = None;
        for idx in 0..dim {
            let mut v = basis_vector(dim, idx);
            project_out(&mut v, &basis);
            let n = norm(&v);
            if best.as_ref().is_none_or(|(bn, _)| n > *bn) {
                best = Some((n, v));
            }
        }
        let (n, v) = best.expect("dimension is positive");
        basis.push(v.into_iter().map(|z| z / n).collect());
    }
    basis
}

/// Unit phase `e^{iφ}` with `a ≈ e^{iφ} b`, read off the largest-magnitude
/// entry of `b`. Returns `None` for a zero `b`.
pub fn relative_phase(a: &[Complex64], b: &[Complex64]) -> Option<Complex64> {
    let (idx, mag) = b
        .iter()
        .enumerate()
        .map(|(i, z)| (i, z.norm()))
        .fold((0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
    if mag == 0.0 {
        return None;
    }
    let ratio = a[idx] / b[idx];
    let r = ratio.norm();
    if r == 0.0 {
        return None;
    }
    Some(ratio / r)
}

/// Largest entrywise deviation between `a` and `b` after removing a single
/// global phase.
pub fn phase_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len(), "phase comparison of unequal lengths");
    match relative_phase(a, b) {
        Some(p) => a
            .iter()
            .zip(b)
            .map(|(x, y)| (x - p * y).norm())
            .fold(0.0, f64::max),
        None => a.iter().map(|z| z.norm()).fold(0.0, f64::max),
    }
}

pub fn equal_up_to_phase(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    phase_distance(a, b) <= tol
}
