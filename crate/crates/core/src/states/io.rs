use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// On-disk JSON layout: `{"split": [d1, d2], "re": [[...]], "im": [[...]]}`.
///
/// `im` may be omitted for real matrices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub split: [usize; 2],
    pub re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<f64>>>,
}

impl StateFile {
    pub fn from_state(rho: &DensityMatrix) -> Self {
        let m = rho.matrix();
        let n = m.dim();
        let re = (0..n).map(|i| m.row(i).iter().map(|z| z.re).collect()).collect();
        let im = (0..n).map(|i| m.row(i).iter().map(|z| z.im).collect()).collect();
        let (d1, d2) = rho.split();
        Self {
            split: [d1, d2],
            re,
            im: Some(im),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        let n = self.re.len();
        let shape_error = |what: &str, row: usize, len: usize| {
            Error::Parse(format!("{what} row {row} has {len} entries, expected {n}"))
        };
        if n == 0 {
            return Err(Error::Parse("matrix has no rows".into()));
        }
        if let Some(im) = &self.im {
            if im.len() != n {
                return Err(Error::Parse(format!(
                    "'im' has {} rows, expected {n}",
                    im.len()
                )));
            }
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in self.re.iter().enumerate() {
            if row.len() != n {
                return Err(shape_error("'re'", i, row.len()));
            }
            let im_row = match &self.im {
                Some(im) if im[i].len() != n => return Err(shape_error("'im'", i, im[i].len())),
                Some(im) => Some(&im[i]),
                None => None,
            };
            for (j, &x) in row.iter().enumerate() {
                let y = im_row.map_or(0.0, |r| r[j]);
                data.push(Complex64::new(x, y));
            }
        }
        ComplexMatrix::from_vec(n, data)
    }

    pub fn to_state(&self, tol: f64) -> Result<DensityMatrix> {
        DensityMatrix::with_tol(self.to_matrix()?, (self.split[0], self.split[1]), tol)
    }
}

/// Parses a JSON state file; syntax errors carry line and column.
pub fn parse_state_json(text: &str, tol: f64) -> Result<DensityMatrix> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    file.to_state(tol)
}

pub fn state_to_json(rho: &DensityMatrix) -> String {
    serde_json::to_string_pretty(&StateFile::from_state(rho)).expect("plain data serializes")
}
