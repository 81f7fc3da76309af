//! Library side of the `phrasecast` command-line tool.

pub mod args;
pub mod commands;
pub mod ingest;
pub mod report;

use anyhow::Result;

use args::Command;
use commands::Outputs;

pub fn run(command: &Command) -> Result<Outputs> {
    match command {
        Command::Forecast(a) => commands::run_forecast(a, "forecast"),
        Command::Backtest(a) => commands::run_forecast(a, "backtest"),
        Command::Generate(a) => commands::run_generate(a),
    }
}
