use std::path::Path;

use factorlab_core::states::state_to_json;
use factorlab_core::transforms::{conjugate, named_switch};

use crate::classify::{report, StateSource};
use crate::error::{CliError, CliResult};
use crate::table::Row;

/// Applies a named switch to a state and classifies both. The transformed
/// state is optionally written as a state file.
pub fn run(
    name: &str,
    args: &[String],
    source: &StateSource,
    tol: f64,
    emit_state: Option<&Path>,
) -> CliResult<Vec<Row>> {
    let rho = source.load(tol)?;
    let switch = named_switch(name, args, &rho)?;
    let out = conjugate(&rho, &switch)?;
    if let Some(path) = emit_state {
        std::fs::write(path, state_to_json(&out) + "\n").map_err(|source| CliError::Write {
            path: path.to_path_buf(),
            source,
        })?;
    }
    let label = source.label();
    let before = report(&label, &rho, tol)?;
    let after = report(&format!("{} | {label}", switch.description()), &out, tol)?;
    Ok(vec![
        Row::new().with("stage", "before").with_all(before),
        Row::new().with("stage", "after").with_all(after),
    ])
}
