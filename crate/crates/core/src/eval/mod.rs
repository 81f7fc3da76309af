//! Synthetic scenarios, holdout backtests and error metrics.

mod backtest;
mod generator;
pub mod metrics;

pub use backtest::{holdout_backtest, BacktestReport};
pub use generator::{generate, GeneratorKind, GeneratorSpec, UniformNoise};
