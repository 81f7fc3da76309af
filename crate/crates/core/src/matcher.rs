//! Exhaustive search for the historical window most similar to the most
//! recent one.
//!
//! A candidate is a window of length `N` starting at 1-based position `s`
//! whose `P` followers are all observed, so `1 <= s <= K - N - P + 1`.
//! Candidates may overlap the query window.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{detrend, fit_linear_trend, pearson, TimeSeries};

/// Relative size below which detrended residuals count as round-off.
pub const FLAT_RESIDUAL_TOLERANCE: f64 = 1e-9;

/// Scores closer than this to the best one are ties (correlation is absolute,
/// difference is scaled by `N * max|x| + 1`).
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SimilarityCriterion {
    /// Sum of absolute element-wise differences; lower is better, 0 on identity.
    Difference,
    /// Pearson correlation; higher is better.
    Correlation,
}

impl SimilarityCriterion {
    /// True when `a` is a strictly better score than `b`.
    pub fn better(self, a: f64, b: f64) -> bool {
        match self {
            SimilarityCriterion::Difference => a < b,
            SimilarityCriterion::Correlation => a > b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WindowMatch {
    /// 1-based position of the candidate's first element.
    pub start: usize,
    pub score: f64,
    pub criterion: SimilarityCriterion,
}

/// Admissible 1-based candidate starts for a series of length `k`.
pub fn enumerate_candidates(k: usize, n: usize, p: usize) -> Result<RangeInclusive<usize>> {
    if n < 2 {
        return Err(Error::WindowTooSmall(n));
    }
    if p < 1 {
        return Err(Error::InvalidConfig("horizon must be at least 1".into()));
    }
    let required = n + p + 1;
    if k < required {
        return Err(Error::SeriesTooShort {
            required,
            actual: k,
        });
    }
    Ok(1..=k - n - p + 1)
}

/// A window prepared for scoring: detrended if requested, with flat residuals
/// collapsed to exact zeros.
fn prepare(window: &[f64], detrend_mode: bool) -> Result<Vec<f64>> {
    if !detrend_mode {
        return Ok(window.to_vec());
    }
    let trend = fit_linear_trend(window)?;
    let mut residual = detrend(window, &trend);
    let (lo, hi) = window
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let limit = FLAT_RESIDUAL_TOLERANCE * (hi - lo + 1.0);
    if residual.iter().all(|r| r.abs() <= limit) {
        residual.iter_mut().for_each(|r| *r = 0.0);
    }
    Ok(residual)
}

fn score_prepared(query: &[f64], candidate: &[f64], criterion: SimilarityCriterion) -> Result<f64> {
    match criterion {
        SimilarityCriterion::Difference => Ok(query
            .iter()
            .zip(candidate)
            .map(|(q, c)| (q - c).abs())
            .sum()),
        SimilarityCriterion::Correlation => pearson(query, candidate),
    }
}

/// Similarity of two equal-length windows, optionally after removing each
/// window's own least-squares line.
pub fn score_window(
    query: &[f64],
    candidate: &[f64],
    criterion: SimilarityCriterion,
    detrend_mode: bool,
) -> Result<f64> {
    if query.len() != candidate.len() {
        return Err(Error::LengthMismatch {
            left: query.len(),
            right: candidate.len(),
        });
    }
    if query.len() < 2 {
        return Err(Error::WindowTooSmall(query.len()));
    }
    score_prepared(
        &prepare(query, detrend_mode)?,
        &prepare(candidate, detrend_mode)?,
        criterion,
    )
}

/// Scores every admissible candidate against the last `n` values.
///
/// Entries are `(start, score)`; `None` marks an undefined correlation.
pub fn candidate_scores(
    series: &TimeSeries,
    n: usize,
    p: usize,
    criterion: SimilarityCriterion,
    detrend_mode: bool,
) -> Result<Vec<(usize, Option<f64>)>> {
    let values = series.values();
    let starts = enumerate_candidates(values.len(), n, p)?;
    let query = prepare(&values[values.len() - n..], detrend_mode)?;
    starts
        .map(|start| {
            let candidate = prepare(&values[start - 1..start - 1 + n], detrend_mode)?;
            match score_prepared(&query, &candidate, criterion) {
                Ok(score) => Ok((start, Some(score))),
                Err(Error::UndefinedCorrelation) => Ok((start, None)),
                Err(e) => Err(e),
            }
        })
        .collect()
}

/// Best candidate for the query formed by the last `n` values.
///
/// Ties (scores within [`TIE_TOLERANCE`] of the best) go to the most recent
/// candidate. Candidates with undefined correlation are skipped.
pub fn find_best_match(
    series: &TimeSeries,
    n: usize,
    p: usize,
    criterion: SimilarityCriterion,
    detrend_mode: bool,
) -> Result<WindowMatch> {
    let scores = candidate_scores(series, n, p, criterion, detrend_mode)?;
    let best = scores
        .iter()
        .filter_map(|&(_, s)| s)
        .reduce(|a, b| if criterion.better(b, a) { b } else { a })
        .ok_or(Error::NoValidCandidate)?;
    let tolerance = match criterion {
        SimilarityCriterion::Correlation => TIE_TOLERANCE,
        SimilarityCriterion::Difference => {
            let magnitude = series.values().iter().fold(0.0f64, |m, v| m.max(v.abs()));
            TIE_TOLERANCE * (n as f64 * magnitude + 1.0)
        }
    };
    let (start, score) = scores
        .iter()
        .rev()
        .find_map(|&(start, s)| {
            s.filter(|s| (s - best).abs() <= tolerance)
                .map(|s| (start, s))
        })
        .expect("best score comes from some candidate");
    Ok(WindowMatch {
        start,
        score,
        criterion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use SimilarityCriterion::*;

    fn ts(v: Vec<f64>) -> TimeSeries {
        TimeSeries::new(v).unwrap()
    }

    #[test]
    fn candidate_ranges() {
        assert_eq!(enumerate_candidates(100, 20, 20).unwrap(), 1..=61);
        // Shortest admissible series: start 2's follower ends exactly at K.
        assert_eq!(enumerate_candidates(41, 20, 20).unwrap(), 1..=2);
        assert_eq!(
            enumerate_candidates(40, 20, 20).unwrap_err(),
            Error::SeriesTooShort {
                required: 41,
                actual: 40
            }
        );
        assert_eq!(
            enumerate_candidates(40, 1, 2).unwrap_err(),
            Error::WindowTooSmall(1)
        );
    }

    #[test]
    fn score_examples() {
        let q = [0.5, -1.0, 2.0, 7.0];
        assert_eq!(score_window(&q, &q, Difference, false).unwrap(), 0.0);
        assert_eq!(score_window(&q, &q, Difference, true).unwrap(), 0.0);
        assert_eq!(score_window(&q, &q, Correlation, false).unwrap(), 1.0);
        assert_eq!(
            score_window(&[1.0, 2.0, 3.0], &[1.0, 2.0, 4.0], Difference, false).unwrap(),
            1.0
        );
        let r = score_window(
            &[0.0, 1.0, 0.0, -1.0],
            &[5.0, 6.0, 5.0, 4.0],
            Correlation,
            false,
        )
        .unwrap();
        assert!((r - 1.0).abs() < 1e-15);
    }

    #[test]
    fn line_windows_are_flat_after_detrending() {
        let a = [1.0, 2.0, 3.0, 4.0, 5.0];
        let b = [0.1, 0.2, 0.3, 0.4, 0.5];
        assert_eq!(
            score_window(&a, &b, Correlation, true),
            Err(Error::UndefinedCorrelation)
        );
        assert_eq!(score_window(&a, &b, Difference, true).unwrap(), 0.0);
    }

    #[test]
    fn unique_constructed_match() {
        // Positions 10..=14 repeat the last five values; nothing else does.
        let mut v: Vec<f64> = (1..=40).map(|k| k as f64 * 10.0).collect();
        let tail = [1.5, -2.0, 3.25, 0.0, 8.0];
        v[9..14].copy_from_slice(&tail);
        v[35..40].copy_from_slice(&tail);
        let m = find_best_match(&ts(v), 5, 1, Difference, false).unwrap();
        assert_eq!((m.start, m.score), (10, 0.0));
    }

    #[test]
    fn ties_go_to_the_most_recent_candidate() {
        let mut v: Vec<f64> = (1..=60).map(|k| (k * k) as f64).collect();
        let tail = [1.0, 4.0, 2.0, 8.0];
        v[9..13].copy_from_slice(&tail);
        v[29..33].copy_from_slice(&tail);
        v[56..60].copy_from_slice(&tail);
        let m = find_best_match(&ts(v), 4, 3, Difference, false).unwrap();
        assert_eq!((m.start, m.score), (30, 0.0));
    }

    #[test]
    fn periodic_series_matches_one_period_back() {
        let v: Vec<f64> = (1..=100)
            .map(|k| 2.0 * (std::f64::consts::TAU * k as f64 / 25.0).sin())
            .collect();
        let (q, _) = crate::series::quantize(&ts(v), 32).unwrap();
        let m = find_best_match(&q, 20, 20, Difference, false).unwrap();
        assert_eq!((m.start, m.score), (56, 0.0));
        // Starts 6 and 31 are exact repeats too; recency wins.
        let scores = candidate_scores(&q, 20, 20, Difference, false).unwrap();
        let zeros: Vec<usize> = scores
            .iter()
            .filter(|(_, s)| *s == Some(0.0))
            .map(|(s, _)| *s)
            .collect();
        assert_eq!(zeros, vec![6, 31, 56]);
    }

    #[test]
    fn all_flat_candidates_give_no_valid_candidate() {
        let v: Vec<f64> = (1..=30).map(|k| 3.0 * k as f64 - 1.0).collect();
        assert_eq!(
            find_best_match(&ts(v.clone()), 5, 2, Correlation, true),
            Err(Error::NoValidCandidate)
        );
        let m = find_best_match(&ts(v), 5, 2, Difference, true).unwrap();
        assert_eq!((m.start, m.score), (24, 0.0));
    }
}
