use std::process::ExitCode;

use clap::Parser;
use phrasecast_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match phrasecast_cli::run(&cli.command).and_then(|out| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
