use std::io;
use std::process::ExitCode;

use clap::Parser;
use xft_cli::{configure_threads, run, Cli, CliError};

fn report(e: &CliError) -> ExitCode {
    eprintln!("{}: {e}", e.category());
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        return report(&e);
    }
    match run(&cli, io::stdout().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report(&e),
    }
}
