use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use kvalent::cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let outcome = run(&config);
    // A closed pipe on stdout is not worth a panic.
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.status.code() as u8)
}
