use std::process::ExitCode;

use beamsplit::{emit, run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|report| emit(&cli, &report)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("beamsplit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
