use crate::series::pearson;

pub fn mae(forecast: &[f64], actual: &[f64]) -> f64 {
    assert_eq!(forecast.len(), actual.len());
    forecast
        .iter()
        .zip(actual)
        .map(|(f, a)| (f - a).abs())
        .sum::<f64>()
        / forecast.len() as f64
}

pub fn rmse(forecast: &[f64], actual: &[f64]) -> f64 {
    assert_eq!(forecast.len(), actual.len());
    let mse = forecast
        .iter()
        .zip(actual)
        .map(|(f, a)| (f - a).powi(2))
        .sum::<f64>()
        / forecast.len() as f64;
    mse.sqrt()
}

/// Mean absolute percentage error over elements with a nonzero actual.
///
/// Returns the MAPE (percent, `None` if every actual is zero) and the number
/// of skipped elements.
pub fn mape(forecast: &[f64], actual: &[f64]) -> (Option<f64>, usize) {
    assert_eq!(forecast.len(), actual.len());
    let (sum, used) = forecast
        .iter()
        .zip(actual)
        .filter(|(_, &a)| a != 0.0)
        .fold((0.0, 0usize), |(s, n), (f, a)| {
            (s + ((f - a) / a).abs(), n + 1)
        });
    let skipped = actual.len() - used;
    ((used > 0).then(|| sum / used as f64 * 100.0), skipped)
}

/// Pearson correlation, `None` when either side is constant.
pub fn correlation(forecast: &[f64], actual: &[f64]) -> Option<f64> {
    pearson(forecast, actual).ok()
}
