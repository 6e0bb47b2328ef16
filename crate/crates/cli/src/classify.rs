use std::path::{Path, PathBuf};

use factorlab_core::measures::{
    abs_sep_2x2, concurrence, kz_ball_member_tol, maxent_split_weight, mixedness, ppt_check_tol,
    purity, split_bound_check, vn_entropy, PptClass,
};
use factorlab_core::states::{named_state, parse_state_json, DensityMatrix};
use factorlab_core::witness_bell::horodecki_bmax;

use crate::error::{CliError, CliResult};
use crate::table::{Cell, Row};

/// Where a state comes from: a JSON file or a family name with arguments.
#[derive(Debug, Clone, PartialEq)]
pub enum StateSource {
    File(PathBuf),
    Family(Vec<String>),
}

impl StateSource {
    pub fn label(&self) -> String {
        match self {
            StateSource::File(p) => p.display().to_string(),
            StateSource::Family(words) => words.join(" "),
        }
    }

    pub fn load(&self, tol: f64) -> CliResult<DensityMatrix> {
        match self {
            StateSource::File(path) => load_file(path, tol),
            StateSource::Family(words) => {
                let (name, args) = words
                    .split_first()
                    .ok_or_else(|| CliError::Usage("no state family given".into()))?;
                Ok(named_state(name, args)?)
            }
        }
    }
}

pub fn load_file(path: &Path, tol: f64) -> CliResult<DensityMatrix> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_state_json(&text, tol).map_err(|e| match e {
        factorlab_core::Error::Parse(msg) => {
            factorlab_core::Error::Parse(format!("{}: {msg}", path.display())).into()
        }
        other => other.into(),
    })
}

pub fn ppt_label(c: PptClass) -> &'static str {
    match c {
        PptClass::Ppt => "PPT",
        PptClass::Npt => "NPT",
    }
}

/// Classification report. Two-qubit-only quantities are left empty for other
/// splits; the `β` fields are filled only when a maximally entangled
/// projector weight is detected.
pub fn report(label: &str, rho: &DensityMatrix, tol: f64) -> CliResult<Row> {
    let (d1, d2) = rho.split();
    let verdict = ppt_check_tol(rho, tol);
    let qubits = rho.split() == (2, 2);
    let beta = maxent_split_weight(rho);
    let beta_entangled = match beta {
        Some(b) => Some(split_bound_check(b, d1)?),
        None => None,
    };
    let mut row = Row::new()
        .with("state", label)
        .with("split", format!("{d1}x{d2}"))
        .with("purity", purity(rho))
        .with("mixedness", mixedness(rho))
        .with("entropy", vn_entropy(rho))
        .with("ppt", ppt_label(verdict.classification))
        .with("min_pt_eigenvalue", verdict.min_pt_eigenvalue);
    if qubits {
        row.push("concurrence", concurrence(rho)?);
        row.push("bmax", horodecki_bmax(rho)?);
        row.push("abs_separable", abs_sep_2x2(&rho.spectrum().values)?);
    } else {
        row.push("concurrence", Cell::Empty);
        row.push("bmax", Cell::Empty);
        row.push("abs_separable", Cell::Empty);
    }
    row.push("kz_member", kz_ball_member_tol(rho, tol));
    row.push("maxent_weight", beta);
    row.push("maxent_weight_entangled", beta_entangled);
    Ok(row)
}

pub fn run(source: &StateSource, tol: f64) -> CliResult<Vec<Row>> {
    let rho = source.load(tol)?;
    Ok(vec![report(&source.label(), &rho, tol)?])
}
