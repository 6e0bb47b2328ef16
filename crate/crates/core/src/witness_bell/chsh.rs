use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{herm_eigensystem, pauli, ComplexMatrix};
use crate::random::{random_unit3, seeded};
use crate::states::{to_bloch, DensityMatrix};
use crate::DEFAULT_TOL;

type Vec3 = [f64; 3];
type Mat3 = [[f64; 3]; 3];

fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm3(a: &Vec3) -> f64 {
    dot(a, a).sqrt()
}

fn add(a: &Vec3, b: &Vec3, s: f64) -> Vec3 {
    [a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]]
}

fn mat_vec(m: &Mat3, v: &Vec3) -> Vec3 {
    [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)]
}

fn transpose(m: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = m[j][i];
        }
    }
    out
}

/// Unit vector along `v`, or `fallback` when `v` vanishes.
fn unit_or(v: Vec3, fallback: Vec3) -> Vec3 {
    let n = norm3(&v);
    if n > 1e-14 {
        [v[0] / n, v[1] / n, v[2] / n]
    } else {
        fallback
    }
}

/// Measurement directions for `½(a·σ⊗(b+b′)·σ + a′·σ⊗(b−b′)·σ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChshSetting {
    pub a: Vec3,
    pub a_prime: Vec3,
    pub b: Vec3,
    pub b_prime: Vec3,
}

impl ChshSetting {
    pub fn new(a: Vec3, a_prime: Vec3, b: Vec3, b_prime: Vec3) -> Result<Self> {
        for v in [&a, &a_prime, &b, &b_prime] {
            let n = norm3(v);
            if (n - 1.0).abs() > DEFAULT_TOL {
                return Err(Error::NotNormalized { norm: n });
            }
        }
        Ok(Self {
            a,
            a_prime,
            b,
            b_prime,
        })
    }

    /// Value against a correlation matrix `t_ij = Tr ρ σ_i⊗σ_j`.
    fn value_for(&self, t: &Mat3) -> f64 {
        let plus = add(&self.b, &self.b_prime, 1.0);
        let minus = add(&self.b, &self.b_prime, -1.0);
        0.5 * (dot(&self.a, &mat_vec(t, &plus)) + dot(&self.a_prime, &mat_vec(t, &minus)))
    }
}

fn spin_along(n: &Vec3) -> ComplexMatrix {
    let s = pauli::sigmas();
    let mut acc = ComplexMatrix::zeros(2);
    for (i, m) in s.iter().enumerate() {
        acc = &acc + &m.scale_real(n[i]);
    }
    acc
}

pub fn chsh_operator(s: &ChshSetting) -> ComplexMatrix {
    let plus = spin_along(&add(&s.b, &s.b_prime, 1.0));
    let minus = spin_along(&add(&s.b, &s.b_prime, -1.0));
    (&spin_along(&s.a).kron(&plus) + &spin_along(&s.a_prime).kron(&minus)).scale_real(0.5)
}

/// `Tr ρ B_CHSH`.
pub fn chsh_value(rho: &DensityMatrix, s: &ChshSetting) -> Result<f64> {
    rho.expect_split((2, 2))?;
    Ok(rho.matrix().matmul(&chsh_operator(s)).trace().re)
}

pub fn correlation_matrix(rho: &DensityMatrix) -> Result<Mat3> {
    Ok(to_bloch(rho)?.t)
}

/// Eigenpairs of the real symmetric `tᵀt`, descending.
fn ttt_eigen(t: &Mat3) -> (Vec<f64>, Vec<Vec3>) {
    let tt = transpose(t);
    let mut m = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = (0..3).map(|k| tt[i][k] * t[k][j]).sum();
        }
    }
    let rows: Vec<&[f64]> = m.iter().map(|r| r.as_slice()).collect();
    let spec = herm_eigensystem(&ComplexMatrix::from_real_rows(&rows))
        .expect("tᵀt is symmetric");
    let vectors = spec
        .vectors
        .iter()
        .map(|v| {
            // eigenvectors of a real symmetric matrix are real up to a phase
            let k = (0..3)
                .max_by(|&i, &j| v[i].norm().total_cmp(&v[j].norm()))
                .expect("three components");
            let phase = v[k].conj() / v[k].norm();
            let r: Vec3 = [(v[0] * phase).re, (v[1] * phase).re, (v[2] * phase).re];
            unit_or(r, [1.0, 0.0, 0.0])
        })
        .collect();
    (spec.values, vectors)
}

/// Maximal CHSH value `√(μ₁ + μ₂)` with `μ₁ ≥ μ₂` the two largest
/// eigenvalues of `tᵀt`; the state violates CHSH iff this exceeds 1.
pub fn horodecki_bmax(rho: &DensityMatrix) -> Result<f64> {
    let t = correlation_matrix(rho)?;
    let (mu, _) = ttt_eigen(&t);
    Ok((mu[0].max(0.0) + mu[1].max(0.0)).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChshOptimum {
    /// Value of the constructive setting.
    pub value: f64,
    pub setting: ChshSetting,
    /// Best value found by the seeded alternating search.
    pub search_value: f64,
}

/// Constructs the optimal setting from the top two eigenvectors `c₁, c₂` of
/// `tᵀt`: `a ∝ t c₁`, `a′ ∝ t c₂`, `b, b′ = cos φ c₁ ± sin φ c₂` with
/// `tan φ = |t c₂| / |t c₁|`. The result is cross-checked by alternating
/// maximization from random starts driven by `seed`.
pub fn chsh_maximize(rho: &DensityMatrix, seed: u64) -> Result<ChshOptimum> {
    let t = correlation_matrix(rho)?;
    let (_, c) = ttt_eigen(&t);
    let (c1, c2) = (c[0], c[1]);
    let tc1 = mat_vec(&t, &c1);
    let tc2 = mat_vec(&t, &c2);
    let (n1, n2) = (norm3(&tc1), norm3(&tc2));
    let phi = n2.atan2(n1);
    let a = unit_or(tc1, c1);
    let a_prime = unit_or(tc2, c2);
    let c1_cos = c1.map(|x| x * phi.cos());
    let b = add(&c1_cos, &c2, phi.sin());
    let b_prime = add(&c1_cos, &c2, -phi.sin());
    let setting = ChshSetting::new(a, a_prime, unit_or(b, c1), unit_or(b_prime, c1))?;
    let value = setting.value_for(&t);
    let search_value = alternating_search(&t, seed);
    Ok(ChshOptimum {
        value,
        setting,
        search_value,
    })
}

const RESTARTS: usize = 8;
const SWEEPS: usize = 200;

/// For fixed `b, b′` the best `a, a′` are `t(b ± b′)` normalized, and for fixed
/// `a, a′` the best `b, b′` are `tᵀ(a ± a′)` normalized; alternating the two
/// steps never decreases the value.
fn alternating_search(t: &Mat3, seed: u64) -> f64 {
    let mut rng = seeded(seed);
    let tt = transpose(t);
    let mut best = f64::NEG_INFINITY;
    for _ in 0..RESTARTS {
        let mut b = random_unit3(&mut rng);
        let mut b_prime = random_unit3(&mut rng);
        let mut a = random_unit3(&mut rng);
        let mut a_prime = random_unit3(&mut rng);
        for _ in 0..SWEEPS {
            a = unit_or(mat_vec(t, &add(&b, &b_prime, 1.0)), a);
            a_prime = unit_or(mat_vec(t, &add(&b, &b_prime, -1.0)), a_prime);
            b = unit_or(mat_vec(&tt, &add(&a, &a_prime, 1.0)), b);
            b_prime = unit_or(mat_vec(&tt, &add(&a, &a_prime, -1.0)), b_prime);
        }
        let s = ChshSetting {
            a,
            a_prime,
            b,
            b_prime,
        };
        best = best.max(s.value_for(t));
    }
    best
}
