use serde::Serialize;

use crate::error::{Error, Result};

/// A least-squares line `y = slope * x + intercept`.
///
/// The regressor `x` is the 1-based position inside the window the line was
/// fitted on. `origin` records the series position that `x = 1` refers to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearTrend {
    pub slope: f64,
    pub intercept: f64,
    pub origin: usize,
}

impl LinearTrend {
    pub fn new(slope: f64, intercept: f64) -> Self {
        Self {
            slope,
            intercept,
            origin: 1,
        }
    }

    pub fn with_origin(self, origin: usize) -> Self {
        Self { origin, ..self }
    }

    /// Value of the line at local position `x`.
    pub fn at(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

/// Ordinary least squares over positions `1..=n`.
pub fn fit_linear_trend(window: &[f64]) -> Result<LinearTrend> {
    let n = window.len();
    if n < 2 {
        return Err(Error::InsufficientPoints(n));
    }
    let nf = n as f64;
    let x_mean = (nf + 1.0) / 2.0;
    let y_mean = window.iter().sum::<f64>() / nf;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (i, &y) in window.iter().enumerate() {
        let dx = (i + 1) as f64 - x_mean;
        sxy += dx * (y - y_mean);
        sxx += dx * dx;
    }
    let slope = sxy / sxx;
    Ok(LinearTrend::new(slope, y_mean - slope * x_mean))
}

/// Subtracts `trend` evaluated at the window's own positions `1..=n`.
pub fn detrend(window: &[f64], trend: &LinearTrend) -> Vec<f64> {
    window
        .iter()
        .enumerate()
        .map(|(i, &y)| y - trend.at((i + 1) as f64))
        .collect()
}

pub fn extrapolate_trend(trend: &LinearTrend, positions: &[usize]) -> Vec<f64> {
    positions.iter().map(|&x| trend.at(x as f64)).collect()
}
