//! Command-line front end for `factorlab-core`: state classification,
//! figure-style parameter sweeps, protocol traces and factorization switches.

pub mod classify;
pub mod error;
pub mod grid;
pub mod protocol;
pub mod sweep;
pub mod table;
pub mod transform;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use classify::StateSource;
use error::{exit, CliError, CliResult};
use grid::Grid;
use protocol::{ProtocolKind, Resources};
use table::{render, Format, Row};

#[derive(Debug, Parser)]
#[command(name = "factorlab", version, about = "Entanglement relative to a chosen factorization")]
pub struct Cli {
    /// Output format; sweeps default to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Numerical tolerance for validation and classification.
    #[arg(long, global = true, env = "FACTORLAB_TOL")]
    pub tol: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    /// JSON state file with `split`, `re` and optional `im`.
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,

    /// Family name and arguments, e.g. `werner 0.5`.
    #[arg(allow_negative_numbers = true)]
    pub family: Vec<String>,
}

impl StateArgs {
    fn source(&self) -> CliResult<StateSource> {
        match (&self.file, self.family.is_empty()) {
            (Some(path), true) => Ok(StateSource::File(path.clone())),
            (None, false) => Ok(StateSource::Family(self.family.clone())),
            _ => Err(CliError::Usage(
                "give either --file PATH or a family name with arguments".into(),
            )),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report purity, entropy, PPT, concurrence, Bell value and separability tests.
    Classify(StateArgs),

    /// Tabulate measures over a parameter grid.
    Sweep {
        /// rho_theta, ghz_traced, werner, gisin or gisin_compare.
        family: String,
        /// Grid `START:STOP:STEP` or a single value; `pi/4` style terms allowed.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_grid)]
        theta: Option<Grid>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_grid)]
        lambda: Option<Grid>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_grid)]
        alpha: Option<Grid>,
        /// Comma-separated output columns.
        #[arg(long, value_delimiter = ',')]
        outputs: Option<Vec<String>>,
    },

    /// Simulate every Bell-measurement outcome of a protocol.
    Protocol {
        #[arg(value_enum)]
        kind: ProtocolKind,
        /// Dimension of each factor.
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Resource isometries for swapping.
        #[arg(long, value_enum, default_value_t = Resources::Identity)]
        resources: Resources,
    },

    /// Apply a named factorization switch to a state and classify both.
    Transform {
        /// Switch name, see `factorlab list`.
        name: String,
        /// Switch arguments such as an angle.
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
        #[arg(long, conflicts_with = "state")]
        file: Option<PathBuf>,
        /// Family spec as one string, e.g. "werner 0.5".
        #[arg(long)]
        state: Option<String>,
        /// Also write the transformed state as a JSON state file.
        #[arg(long)]
        emit_state: Option<PathBuf>,
    },

    /// List state families, switches and sweep families.
    List,
}

fn parse_grid(s: &str) -> Result<Grid, CliError> {
    s.parse()
}

fn list_rows() -> Vec<Row> {
    let mut rows = Vec::new();
    for (name, args) in factorlab_core::states::STATE_FAMILIES {
        rows.push(Row::new().with("kind", "state").with("name", *name).with("arguments", *args));
    }
    for (name, args) in factorlab_core::transforms::SWITCH_NAMES {
        rows.push(Row::new().with("kind", "transform").with("name", *name).with("arguments", *args));
    }
    for f in sweep::FAMILIES {
        rows.push(
            Row::new()
                .with("kind", "sweep")
                .with("name", f.name)
                .with("arguments", f.outputs.join(" ")),
        );
    }
    rows
}

fn tolerance(cli: &Cli) -> CliResult<f64> {
    match cli.tol {
        None => Ok(factorlab_core::DEFAULT_TOL),
        Some(t) if t.is_finite() && t > 0.0 => Ok(t),
        Some(t) => Err(CliError::Usage(format!("tolerance must be positive, got {t}"))),
    }
}

/// Runs a parsed command and returns the rendered output.
pub fn execute(cli: &Cli) -> CliResult<String> {
    let tol = tolerance(cli)?;
    let (rows, default_format) = match &cli.command {
        Command::Classify(state) => (classify::run(&state.source()?, tol)?, Format::Json),
        Command::Sweep {
            family,
            theta,
            lambda,
            alpha,
            outputs,
        } => {
            let spec = sweep::SweepSpec {
                family: family.clone(),
                theta: theta.clone(),
                lambda: lambda.clone(),
                alpha: alpha.clone(),
                outputs: outputs.clone(),
            };
            (sweep::run(&spec)?, Format::Csv)
        }
        Command::Protocol { kind, d, resources } => {
            (protocol::run(*kind, *d, cli.seed, *resources)?, Format::Json)
        }
        Command::Transform {
            name,
            args,
            file,
            state,
            emit_state,
        } => {
            let source = match (file, state) {
                (Some(path), None) => StateSource::File(path.clone()),
                (None, Some(spec)) => {
                    StateSource::Family(spec.split_whitespace().map(String::from).collect())
                }
                _ => {
                    return Err(CliError::Usage(
                        "give either --file PATH or --state \"FAMILY ARGS\"".into(),
                    ))
                }
            };
            let rows = transform::run(name, args, &source, tol, emit_state.as_deref())?;
            (rows, Format::Json)
        }
        Command::List => (list_rows(), Format::Csv),
    };
    render(&rows, cli.format.unwrap_or(default_format))
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Write {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::PARSE } else { exit::OK };
        }
    };
    match execute(&cli).and_then(|text| emit(&cli, &text)) {
        Ok(()) => exit::OK,
        Err(e) => {
            eprintln!("factorlab: {e}");
            e.exit_code()
        }
    }
}
