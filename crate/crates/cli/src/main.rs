use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use quotchi_cli::{output_path, run, Cli, EXIT_INTERNAL};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, stdout, stderr) = run(&cli);
    eprint!("{stderr}");
    let written = match &cli.global.output {
        Some(path) => std::fs::write(output_path(path), &stdout),
        None => std::io::stdout().write_all(stdout.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_INTERNAL as u8);
    }
    ExitCode::from(code as u8)
}
