//! Series representation and the numerical primitives the forecasters are
//! built from: quantization, least-squares trends and Pearson correlation.

mod correlation;
mod quantize;
mod trend;

pub use correlation::pearson;
pub use quantize::{quantize, QuantizationGrid};
pub use trend::{detrend, extrapolate_trend, fit_linear_trend, LinearTrend};

use crate::error::{Error, Result};

/// An ordered sequence of finite observations at uniform time steps.
///
/// Storage is 0-based. Anything reported to users (window starts, forecast
/// indices) uses 1-based positions.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySeries);
        }
        if let Some((i, &v)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite {
                position: i + 1,
                value: v,
            });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Number of observations, `K`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Observation at 1-based position `k`.
    pub fn at(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn range(&self) -> f64 {
        self.max() - self.min()
    }

    /// True when every value equals the first one.
    pub fn is_constant(&self) -> bool {
        let first = self.values[0];
        self.values.iter().all(|&v| v == first)
    }

    /// The first `len` observations.
    pub fn prefix(&self, len: usize) -> Result<TimeSeries> {
        TimeSeries::new(self.values[..len.min(self.values.len())].to_vec())
    }
}

impl TryFrom<Vec<f64>> for TimeSeries {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Self::new(values)
    }
}

impl AsRef<[f64]> for TimeSeries {
    fn as_ref(&self) -> &[f64] {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert_eq!(TimeSeries::new(vec![]), Err(Error::EmptySeries));
        assert!(matches!(
            TimeSeries::new(vec![1.0, f64::NAN]),
            Err(Error::NonFinite { position: 2, .. })
        ));
        assert!(TimeSeries::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn one_based_access() {
        let s = TimeSeries::new(vec![4.0, 5.0, 6.0]).unwrap();
        assert_eq!(s.at(0), None);
        assert_eq!(s.at(1), Some(4.0));
        assert_eq!(s.at(3), Some(6.0));
        assert_eq!(s.at(4), None);
        assert_eq!(s.range(), 2.0);
        assert!(!s.is_constant());
        assert!(TimeSeries::new(vec![2.0; 3]).unwrap().is_constant());
    }
}
