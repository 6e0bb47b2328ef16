use factorlab_core::protocols::{swap_all, teleport_all, Isometry, PROTOCOL_TOL};
use factorlab_core::random::{random_state_vector, random_unitary, seeded};

use crate::error::{CliError, CliResult};
use crate::table::Row;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ProtocolKind {
    Teleport,
    Swap,
}

/// Isometries used for the swapping resources.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Resources {
    Identity,
    Random,
}

fn label(index: (usize, usize)) -> String {
    format!("({},{})", index.0, index.1)
}

fn weyl_label(i: &Isometry) -> String {
    i.weyl_label(PROTOCOL_TOL).map(label).unwrap_or_default()
}

/// Per-outcome trace. Every run asserts its recovery and composition checks;
/// a failure aborts with the failing outcome label.
pub fn run(kind: ProtocolKind, d: usize, seed: u64, resources: Resources) -> CliResult<Vec<Row>> {
    if d < 2 {
        return Err(CliError::Usage(format!("dimension must be at least 2, got {d}")));
    }
    let mut rng = seeded(seed);
    match kind {
        ProtocolKind::Teleport => {
            let phi = random_state_vector(&mut rng, d);
            Ok(teleport_all(&phi)?
                .into_iter()
                .map(|run| {
                    Row::new()
                        .with("outcome", label(run.outcome.index))
                        .with("probability", run.outcome.probability)
                        .with("correction", weyl_label(&run.correction))
                        .with("fidelity", run.fidelity)
                })
                .collect())
        }
        ProtocolKind::Swap => {
            let (i12, i34) = match resources {
                Resources::Identity => (Isometry::identity(d), Isometry::identity(d)),
                Resources::Random => (
                    Isometry::new(random_unitary(&mut rng, d))?,
                    Isometry::new(random_unitary(&mut rng, d))?,
                ),
            };
            Ok(swap_all(&i12, &i34)?
                .into_iter()
                .map(|run| {
                    Row::new()
                        .with("outcome", label(run.outcome.index))
                        .with("probability", run.outcome.probability)
                        .with("i14", weyl_label(&run.i14))
                        .with("composition_error", run.composition_error)
                })
                .collect())
        }
    }
}
