use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hopf_cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let outcome = run(&config);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
