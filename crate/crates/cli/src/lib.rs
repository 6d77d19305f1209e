//! Command-line front end: figure sweeps as CSV, single evaluations and
//! separability verdicts as JSON.

pub mod args;
pub mod commands;
pub mod error;
pub mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};

pub use args::Cli;
pub use commands::{run, Report};
pub use error::CliError;

/// Writes a report in the requested (or its default) format.
pub fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let format = cli.format.unwrap_or(report.default_format);
    let mut out: Box<dyn Write> = match cli.output_path() {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        args::Format::Csv => report.table.write_csv(&mut out)?,
        args::Format::Json => {
            serde_json::to_writer_pretty(&mut out, &report.document)?;
            out.write_all(b"\n")?;
        }
    }
    out.flush()?;
    Ok(())
}
