//! JSON documents written by the CLI. Field names are part of the public
//! interface; see the README for the schema.

use serde::Serialize;

use phrasecast::eval::BacktestReport;
use phrasecast::forecaster::{MultiplierCheck, TrendTransfer};
use phrasecast::{GeneratorSpec, Method, QuantizationGrid};

use crate::ingest::Layout;

pub const TOOL: &str = "phrasecast";

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub subcommand: &'static str,
    pub config: ResolvedConfig,
    pub input: Option<InputDigest>,
}

impl RunManifest {
    pub fn new(
        subcommand: &'static str,
        config: ResolvedConfig,
        input: Option<InputDigest>,
    ) -> Self {
        Self {
            tool: TOOL,
            version: env!("CARGO_PKG_VERSION"),
            subcommand,
            config,
            input,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
    pub rows: usize,
    pub layout: Layout,
    pub header: Option<Vec<String>>,
    pub first_label: Option<String>,
    pub last_label: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "method", rename_all = "lowercase")]
pub enum ResolvedConfig {
    Linguistic {
        horizon: usize,
        multiplier: f64,
        window: usize,
        window_override: bool,
        levels: usize,
        criterion: phrasecast::SimilarityCriterion,
        trend: phrasecast::TrendMode,
        holdout: bool,
    },
    Holt {
        horizon: usize,
        xi: f64,
        phi: f64,
        holdout: bool,
    },
    Generate(GeneratorSpec),
}

#[derive(Debug, Clone, Serialize)]
pub struct Metrics {
    pub mae: f64,
    pub rmse: f64,
    pub mape: Option<f64>,
    pub mape_skipped: usize,
    pub correlation: Option<f64>,
}

impl From<&BacktestReport> for Metrics {
    fn from(r: &BacktestReport) -> Self {
        Self {
            mae: r.mae,
            rmse: r.rmse,
            mape: r.mape,
            mape_skipped: r.mape_skipped,
            correlation: r.forecast_actual_correlation,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ForecastReport {
    pub manifest: RunManifest,
    pub method: Method,
    /// Length of the series the model was run on (excludes held-out values).
    pub series_length: usize,
    pub horizon: usize,
    pub window: Option<usize>,
    /// 1-based index of the first forecast value.
    pub forecast_start_index: usize,
    pub matched_start: Option<usize>,
    pub score: Option<f64>,
    pub grid: Option<QuantizationGrid>,
    pub trend_transfer: Option<TrendTransfer>,
    pub multiplier_check: Option<MultiplierCheck>,
    pub warnings: Vec<String>,
    pub forecast: Vec<f64>,
    pub actual: Option<Vec<f64>>,
    pub backtest: Option<Metrics>,
}
