//! Double exponential smoothing (Holt) baseline.
//!
//! ```text
//! level_k = (1 - xi) * x_k + xi * (level_{k-1} + trend_{k-1})
//! trend_k = (1 - phi) * (level_k - level_{k-1}) + phi * trend_{k-1}
//! x_{K+j} = level_K + j * trend_K
//! ```
//!
//! Initialised with `level_1 = x_1`, `trend_1 = x_2 - x_1`, which makes the
//! recursion exact on straight lines.

use super::HoltConfig;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HoltState {
    pub level: f64,
    pub trend: f64,
}

pub fn holt_smooth(values: &[f64], config: &HoltConfig) -> Result<HoltState> {
    if values.len() < 2 {
        return Err(Error::SeriesTooShort {
            required: 2,
            actual: values.len(),
        });
    }
    let HoltConfig { xi, phi } = *config;
    let mut state = HoltState {
        level: values[0],
        trend: values[1] - values[0],
    };
    for &x in &values[1..] {
        let level = (1.0 - xi) * x + xi * (state.level + state.trend);
        let trend = (1.0 - phi) * (level - state.level) + phi * state.trend;
        state = HoltState { level, trend };
    }
    Ok(state)
}

pub(crate) fn holt_trajectory(state: &HoltState, horizon: usize) -> Vec<f64> {
    (1..=horizon)
        .map(|j| state.level + j as f64 * state.trend)
        .collect()
}
