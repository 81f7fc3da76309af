//! Forecasting pipelines.
//!
//! The phrase-matching forecasters quantize the whole series onto a grid of
//! `S` steps, take the last `N` values as the query, find the most similar
//! historical window and return the `P` values that followed it. With
//! [`TrendMode::Linear`] every window is compared after removing its own
//! least-squares line, and the follower is moved from the candidate's trend
//! onto the query's trend before it is returned.

mod config;
mod holt;

pub use config::{
    derive_window_length, validate_multiplier, ForecastConfig, HoltConfig, MultiplierCheck,
    MultiplierRange, TrendMode,
};
pub use holt::{holt_smooth, HoltState};

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::matcher::{enumerate_candidates, find_best_match, WindowMatch};
use crate::series::{fit_linear_trend, quantize, LinearTrend, QuantizationGrid, TimeSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Linguistic,
    LinguoCorrelation,
    Holt,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Linguistic => "linguistic",
            Method::LinguoCorrelation => "linguo-correlation",
            Method::Holt => "holt",
        })
    }
}

/// A fully specified forecasting model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum ModelSpec {
    Phrase(ForecastConfig),
    Holt { config: HoltConfig, horizon: usize },
}

impl ModelSpec {
    pub fn horizon(&self) -> usize {
        match self {
            ModelSpec::Phrase(c) => c.horizon,
            ModelSpec::Holt { horizon, .. } => *horizon,
        }
    }

    /// Smallest series length the model accepts.
    pub fn min_length(&self) -> Result<usize> {
        match self {
            ModelSpec::Phrase(c) => Ok(c.window_length()? + c.horizon + 1),
            ModelSpec::Holt { .. } => Ok(2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Warning {
    Multiplier(MultiplierCheck),
    ConstantSeries { value: f64 },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::Multiplier(check) => check.fmt(f),
            Warning::ConstantSeries { value } => write!(
                f,
                "series is constant ({value}); quantization skipped and the constant is forecast"
            ),
        }
    }
}

/// Trends used to move a follower from the candidate window onto the query.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrendTransfer {
    pub query: LinearTrend,
    pub candidate: LinearTrend,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Forecast {
    /// Exactly `P` predicted values.
    pub values: Vec<f64>,
    pub method: Method,
    pub model: ModelSpec,
    /// Resolved window length `N` (phrase-matching methods only).
    pub window: Option<usize>,
    pub matched: Option<WindowMatch>,
    pub grid: Option<QuantizationGrid>,
    pub trend_transfer: Option<TrendTransfer>,
    pub warnings: Vec<Warning>,
}

impl Forecast {
    pub fn matched_start(&self) -> Option<usize> {
        self.matched.map(|m| m.start)
    }

    pub fn score(&self) -> Option<f64> {
        self.matched.map(|m| m.score)
    }
}

/// Runs whichever method `model` describes.
pub fn forecast(series: &TimeSeries, model: &ModelSpec) -> Result<Forecast> {
    match model {
        ModelSpec::Phrase(config) => forecast_phrase(series, config),
        ModelSpec::Holt { config, horizon } => forecast_holt(series, config, *horizon),
    }
}

/// Phrase-matching forecast dispatched on `config.trend_mode`.
pub fn forecast_phrase(series: &TimeSeries, config: &ForecastConfig) -> Result<Forecast> {
    let n = config.window_length()?;
    let p = config.horizon;
    enumerate_candidates(series.len(), n, p)?;

    let method = match config.trend_mode {
        TrendMode::None => Method::Linguistic,
        TrendMode::Linear => Method::LinguoCorrelation,
    };
    let mut warnings = Vec::new();
    if config.window.is_none() {
        let check = validate_multiplier(p, config.multiplier);
        if !check.is_ok() {
            warnings.push(Warning::Multiplier(check));
        }
    }
    let mut out = Forecast {
        values: Vec::new(),
        method,
        model: ModelSpec::Phrase(*config),
        window: Some(n),
        matched: None,
        grid: None,
        trend_transfer: None,
        warnings,
    };

    if series.is_constant() {
        let value = series.values()[0];
        out.warnings.push(Warning::ConstantSeries { value });
        out.values = vec![value; p];
        return Ok(out);
    }

    let (quantized, grid) = quantize(series, config.levels)?;
    let detrend_mode = config.trend_mode == TrendMode::Linear;
    let matched = find_best_match(&quantized, n, p, config.criterion, detrend_mode)?;

    let v = quantized.values();
    let k = v.len();
    let cand = matched.start - 1;
    let follower = &v[cand + n..cand + n + p];
    out.values = match config.trend_mode {
        TrendMode::None => follower.to_vec(),
        TrendMode::Linear => {
            let query = fit_linear_trend(&v[k - n..])?.with_origin(k - n + 1);
            let candidate = fit_linear_trend(&v[cand..cand + n])?.with_origin(matched.start);
            out.trend_transfer = Some(TrendTransfer { query, candidate });
            follower
                .iter()
                .enumerate()
                .map(|(j, &f)| {
                    let x = (n + j + 1) as f64;
                    f - candidate.at(x) + query.at(x)
                })
                .collect()
        }
    };
    out.matched = Some(matched);
    out.grid = Some(grid);
    Ok(out)
}

/// Quantize, match raw windows and copy the follower.
pub fn forecast_linguistic(series: &TimeSeries, config: &ForecastConfig) -> Result<Forecast> {
    forecast_phrase(series, &config.trend_mode(TrendMode::None))
}

/// Quantize, match detrended windows and transfer the query trend onto the
/// follower.
pub fn forecast_linguo_correlation(
    series: &TimeSeries,
    config: &ForecastConfig,
) -> Result<Forecast> {
    forecast_phrase(series, &config.trend_mode(TrendMode::Linear))
}

pub fn forecast_holt(series: &TimeSeries, config: &HoltConfig, horizon: usize) -> Result<Forecast> {
    if horizon < 1 {
        return Err(crate::Error::InvalidConfig(
            "horizon must be at least 1".into(),
        ));
    }
    let state = holt_smooth(series.values(), config)?;
    Ok(Forecast {
        values: holt::holt_trajectory(&state, horizon),
        method: Method::Holt,
        model: ModelSpec::Holt {
            config: *config,
            horizon,
        },
        window: None,
        matched: None,
        grid: None,
        trend_transfer: None,
        warnings: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcher::SimilarityCriterion::*;
    use crate::Error;
    use std::f64::consts::TAU;

    fn sinusoid(k: usize) -> Vec<f64> {
        (1..=k)
            .map(|i| 2.0 * (TAU * i as f64 / 25.0).sin())
            .collect()
    }

    #[test]
    fn periodic_forecast_repeats_the_last_period() {
        let s = TimeSeries::new(sinusoid(100)).unwrap();
        let cfg = ForecastConfig::new(20).levels(32);
        let f = forecast_linguistic(&s, &cfg).unwrap();
        assert_eq!(f.matched_start(), Some(56));
        assert_eq!(f.method, Method::Linguistic);
        let grid = f.grid.unwrap();
        let truth = sinusoid(120);
        for (j, v) in f.values.iter().enumerate() {
            assert!((v - truth[100 + j]).abs() <= grid.step() / 2.0 + 1e-12);
        }
        assert!(f.warnings.is_empty());
    }

    #[test]
    fn constant_series_shortcut() {
        let s = TimeSeries::new(vec![5.0; 100]).unwrap();
        for mode in [TrendMode::None, TrendMode::Linear] {
            let f = forecast_phrase(&s, &ForecastConfig::new(20).trend_mode(mode)).unwrap();
            assert_eq!(f.values, vec![5.0; 20]);
            assert_eq!(f.warnings, vec![Warning::ConstantSeries { value: 5.0 }]);
        }
        let h = forecast_holt(&s, &HoltConfig::new(0.4, 0.6).unwrap(), 7).unwrap();
        assert_eq!(h.values, vec![5.0; 7]);
    }

    #[test]
    fn one_value_short() {
        let s = TimeSeries::new(sinusoid(40)).unwrap();
        assert_eq!(
            forecast_linguistic(&s, &ForecastConfig::new(20)).unwrap_err(),
            Error::SeriesTooShort {
                required: 41,
                actual: 40
            }
        );
    }

    #[test]
    fn exact_line_under_trend_mode() {
        // Integer line with S = K - 1 keeps the quantized series on the line.
        let s = TimeSeries::new((1..=60).map(|k| k as f64).collect()).unwrap();
        let cfg = ForecastConfig::new(5).multiplier(2.0).levels(59);
        assert_eq!(
            forecast_linguo_correlation(&s, &cfg.criterion(Correlation)).unwrap_err(),
            Error::NoValidCandidate
        );
        let f = forecast_linguo_correlation(&s, &cfg.criterion(Difference)).unwrap();
        for (j, v) in f.values.iter().enumerate() {
            assert!((v - (61 + j) as f64).abs() <= 0.5, "{:?}", f.values);
        }
    }

    #[test]
    fn short_horizon_multiplier_warning() {
        let s = TimeSeries::new(sinusoid(100)).unwrap();
        let f = forecast_linguistic(&s, &ForecastConfig::new(3)).unwrap();
        assert_eq!(f.values.len(), 3);
        assert!(matches!(f.warnings[0], Warning::Multiplier(_)));
        let f = forecast_linguistic(&s, &ForecastConfig::new(3).window(8)).unwrap();
        assert!(f.warnings.is_empty());
    }

    #[test]
    fn holt_on_a_line() {
        let s = TimeSeries::new((1..=30).map(|k| k as f64).collect()).unwrap();
        let f = forecast_holt(&s, &HoltConfig::new(0.3, 0.7).unwrap(), 3).unwrap();
        for (got, want) in f.values.iter().zip([31.0, 32.0, 33.0]) {
            assert!((got - want).abs() < 1e-9);
        }
    }
}
