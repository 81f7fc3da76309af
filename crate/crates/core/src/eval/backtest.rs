use serde::Serialize;

use super::metrics;
use crate::error::{Error, Result};
use crate::forecaster::{forecast, Forecast, Method, ModelSpec};
use crate::series::TimeSeries;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BacktestReport {
    pub mae: f64,
    pub rmse: f64,
    /// Percent; `None` when every actual is zero.
    pub mape: Option<f64>,
    pub mape_skipped: usize,
    /// `None` when forecast or actual is constant.
    pub forecast_actual_correlation: Option<f64>,
    pub horizon: usize,
    pub method: Method,
    pub model: ModelSpec,
    pub actual: Vec<f64>,
    pub forecast: Forecast,
}

impl BacktestReport {
    pub fn from_forecast(forecast: Forecast, actual: &[f64]) -> Self {
        let (mape, mape_skipped) = metrics::mape(&forecast.values, actual);
        Self {
            mae: metrics::mae(&forecast.values, actual),
            rmse: metrics::rmse(&forecast.values, actual),
            mape,
            mape_skipped,
            forecast_actual_correlation: metrics::correlation(&forecast.values, actual),
            horizon: actual.len(),
            method: forecast.method,
            model: forecast.model,
            actual: actual.to_vec(),
            forecast,
        }
    }
}

/// Holds out the last `P` values, forecasts them from the prefix and scores
/// the result. The model only ever sees the prefix.
pub fn holdout_backtest(series: &TimeSeries, model: &ModelSpec) -> Result<BacktestReport> {
    let p = model.horizon();
    let required = model.min_length()? + p;
    if series.len() < required {
        return Err(Error::SeriesTooShort {
            required,
            actual: series.len(),
        });
    }
    let split = series.len() - p;
    let train = series.prefix(split)?;
    let fc = forecast(&train, model)?;
    Ok(BacktestReport::from_forecast(fc, &series.values()[split..]))
}
