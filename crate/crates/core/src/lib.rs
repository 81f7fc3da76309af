//! Time-series forecasting by phrase matching.
//!
//! A series is quantized onto a small "vocabulary" of evenly spaced levels,
//! the most recent window is treated as a phrase, and the forecast is whatever
//! followed the most similar phrase in the past. Similarity is either the sum
//! of absolute differences or Pearson correlation, optionally after removing
//! each window's own least-squares line. A Holt double exponential smoothing
//! baseline and a holdout backtesting harness are included.
//!
//! ```
//! use phrasecast::{forecast_linguistic, generate, ForecastConfig, GeneratorSpec};
//!
//! let series = generate(&GeneratorSpec::sinusoid(100, 25.0, 2.0)).unwrap();
//! let fc = forecast_linguistic(&series, &ForecastConfig::new(20).levels(32)).unwrap();
//! assert_eq!(fc.values.len(), 20);
//! assert_eq!(fc.matched_start(), Some(56));
//! ```

mod error;
pub mod eval;
pub mod forecaster;
pub mod matcher;
pub mod series;

pub use error::{Error, Result};
pub use eval::{generate, holdout_backtest, BacktestReport, GeneratorKind, GeneratorSpec};
pub use forecaster::{
    derive_window_length, forecast, forecast_holt, forecast_linguistic,
    forecast_linguo_correlation, forecast_phrase, validate_multiplier, Forecast, ForecastConfig,
    HoltConfig, Method, ModelSpec, MultiplierCheck, TrendMode, Warning,
};
pub use matcher::{find_best_match, SimilarityCriterion, WindowMatch};
pub use series::{
    detrend, extrapolate_trend, fit_linear_trend, pearson, quantize, LinearTrend, QuantizationGrid,
    TimeSeries,
};
