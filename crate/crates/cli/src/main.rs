use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use toric_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, text) = run(&cli);
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).is_err() {
        return ExitCode::FAILURE;
    }
    ExitCode::from(code as u8)
}
