use std::process::ExitCode;

use qcancel::cli::{parse_args, run, CliError, EXIT_USAGE};

fn main() -> ExitCode {
    match parse_args(std::env::args_os()) {
        Ok(config) => ExitCode::from(run(&config) as u8),
        Err(CliError::Clap(e)) => e.exit(),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
