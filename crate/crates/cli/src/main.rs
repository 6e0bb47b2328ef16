use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(factorlab_cli::run(std::env::args_os()))
}
