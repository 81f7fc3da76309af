use serde::Serialize;

use super::TimeSeries;
use crate::error::{Error, Result};

/// `S + 1` evenly spaced levels spanning `[min, max]` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantizationGrid {
    min: f64,
    max: f64,
    levels: usize,
    step: f64,
}

impl QuantizationGrid {
    pub fn new(min: f64, max: f64, levels: usize) -> Result<Self> {
        if levels < 1 {
            return Err(Error::InvalidLevels(levels));
        }
        if max <= min || !(max - min).is_finite() {
            return Err(Error::DegenerateRange { value: min });
        }
        Ok(Self {
            min,
            max,
            levels,
            step: (max - min) / levels as f64,
        })
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Grid point `i` for `i` in `0..=S`. The last point is `max` itself so
    /// the range endpoints are reproduced exactly.
    pub fn point(&self, i: usize) -> f64 {
        assert!(
            i <= self.levels,
            "grid index {i} out of 0..={}",
            self.levels
        );
        if i == self.levels {
            self.max
        } else {
            self.min + i as f64 * self.step
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.levels).map(|i| self.point(i))
    }

    /// Index of the nearest grid point. Midpoints round up.
    pub fn index_of(&self, value: f64) -> usize {
        let pos = ((value - self.min) / self.step + 0.5).floor();
        if pos <= 0.0 {
            0
        } else {
            (pos as usize).min(self.levels)
        }
    }

    pub fn snap(&self, value: f64) -> f64 {
        self.point(self.index_of(value))
    }
}

/// Rounds every value to the nearest level of a grid with `levels` steps
/// built from the series' own min and max.
pub fn quantize(series: &TimeSeries, levels: usize) -> Result<(TimeSeries, QuantizationGrid)> {
    if levels < 1 {
        return Err(Error::InvalidLevels(levels));
    }
    let grid = QuantizationGrid::new(series.min(), series.max(), levels)?;
    let values = series.values().iter().map(|&v| grid.snap(v)).collect();
    Ok((TimeSeries::new(values)?, grid))
}
