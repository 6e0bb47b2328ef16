use serde::Serialize;

use crate::linalg::{herm_eigensystem_tol, partial_transpose, Side};
use crate::states::DensityMatrix;
use crate::DEFAULT_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum PptClass {
    Ppt,
    Npt,
}

/// Outcome of the partial-transpose test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PptVerdict {
    pub classification: PptClass,
    pub min_pt_eigenvalue: f64,
}

impl PptVerdict {
    pub fn is_npt(&self) -> bool {
        self.classification == PptClass::Npt
    }
}

pub fn ppt_check(rho: &DensityMatrix) -> PptVerdict {
    ppt_check_tol(rho, DEFAULT_TOL)
}

/// NPT iff the smallest eigenvalue of `ρ^{T_B}` is below `−tol`. NPT implies
/// entanglement; for splits (2,2) and (2,3) PPT implies separability.
pub fn ppt_check_tol(rho: &DensityMatrix, tol: f64) -> PptVerdict {
    let pt = partial_transpose(rho.matrix(), rho.split(), Side::Second)
        .expect("state split matches its dimension");
    let min_pt_eigenvalue = herm_eigensystem_tol(&pt, f64::INFINITY)
        .expect("partial transpose of a Hermitian matrix is Hermitian")
        .min();
    let classification = if min_pt_eigenvalue < -tol {
        PptClass::Npt
    } else {
        PptClass::Ppt
    };
    PptVerdict {
        classification,
        min_pt_eigenvalue,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_state, ghz_traced, werner, BellState};

    #[test]
    fn singlet_is_npt() {
        let v = ppt_check(&bell_state(BellState::PsiMinus));
        assert!(v.is_npt());
        assert!((v.min_pt_eigenvalue + 0.5).abs() < 1e-14);
    }

    #[test]
    fn werner_around_one_third() {
        assert!(!ppt_check(&werner(0.3).unwrap()).is_npt());
        assert!(ppt_check(&werner(0.4).unwrap()).is_npt());
    }

    #[test]
    fn diagonal_states_are_ppt() {
        for t in [0.1, 0.5, 1.2] {
            assert_eq!(ppt_check(&ghz_traced(t)).classification, PptClass::Ppt);
        }
    }
}
