use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "phrasecast",
    version,
    about = "Phrase-matching time-series forecasting"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Forecast the next values of a series.
    Forecast(ForecastArgs),
    /// Forecast the last `--horizon` values from the rest and score the result.
    Backtest(ForecastArgs),
    /// Write a synthetic seasonal series.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    Difference,
    Correlation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TrendArg {
    None,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Linguistic,
    Holt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Sinusoid,
    SinusoidLinear,
    SinusoidNonlinear,
}

#[derive(Debug, Clone, Args)]
pub struct ForecastArgs {
    /// Input CSV: one value per row, or `label,value` rows.
    #[arg(long)]
    pub input: PathBuf,
    /// Forecast CSV destination (default: standard output).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Long-format plot data (`series,index,value`).
    #[arg(long = "plot-data")]
    pub plot_data: Option<PathBuf>,
    /// JSON report destination.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Number of values to forecast (P).
    #[arg(long)]
    pub horizon: usize,
    /// Window multiplier M; window length is ceil(M * P) [default: 1].
    #[arg(long)]
    pub multiplier: Option<f64>,
    /// Window length N; overrides --multiplier.
    #[arg(long)]
    pub window: Option<usize>,
    /// Quantization steps S [default: 32].
    #[arg(long)]
    pub levels: Option<usize>,
    /// Window similarity criterion [default: difference].
    #[arg(long, value_enum)]
    pub criterion: Option<CriterionArg>,
    /// Per-window trend handling [default: none].
    #[arg(long, value_enum)]
    pub trend: Option<TrendArg>,
    #[arg(long, value_enum, default_value = "linguistic")]
    pub method: MethodArg,
    /// Holt level smoothing coefficient [default: 0.5].
    #[arg(long)]
    pub xi: Option<f64>,
    /// Holt trend smoothing coefficient [default: 0.5].
    #[arg(long)]
    pub phi: Option<f64>,
    /// Hold out the last P values and report error metrics.
    #[arg(long)]
    pub holdout: bool,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum, default_value = "sinusoid")]
    pub kind: KindArg,
    #[arg(long, default_value_t = 100)]
    pub length: usize,
    /// Period in samples.
    #[arg(long, default_value_t = 25.0)]
    pub period: f64,
    /// Half the peak-to-peak range of the seasonal part.
    #[arg(long, default_value_t = 2.0)]
    pub amplitude: f64,
    /// Linear trend per step [default: 0.02 for sinusoid-linear, 0.1 for sinusoid-nonlinear].
    #[arg(long)]
    pub slope: Option<f64>,
    /// Quadratic trend coefficient [default: -0.001; sinusoid-nonlinear only].
    #[arg(long)]
    pub quad: Option<f64>,
    /// Phase in radians.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phase: f64,
    /// Uniform noise half-width.
    #[arg(long, default_value_t = 0.0)]
    pub noise: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// CSV destination (default: standard output).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Manifest JSON destination.
    #[arg(long)]
    pub report: Option<PathBuf>,
}
