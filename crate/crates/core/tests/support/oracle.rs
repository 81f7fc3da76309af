//! Brute-force reference for window matching, written independently of the
//! library: the trend uses raw moments (`B = (mean(xy) - x̄ȳ) / (mean(x²) - x̄²)`),
//! correlation is evaluated term by term, and every candidate is re-scored
//! from scratch.

#![allow(dead_code)]

pub fn trend(w: &[f64]) -> (f64, f64) {
    let n = w.len() as f64;
    let xs: Vec<f64> = (1..=w.len()).map(|i| i as f64).collect();
    let xm = xs.iter().sum::<f64>() / n;
    let ym = w.iter().sum::<f64>() / n;
    let xym = xs.iter().zip(w).map(|(x, y)| x * y).sum::<f64>() / n;
    let x2m = xs.iter().map(|x| x * x).sum::<f64>() / n;
    let b = (xym - xm * ym) / (x2m - xm * xm);
    (b, ym - b * xm)
}

pub fn residuals(w: &[f64]) -> Vec<f64> {
    let (b, a) = trend(w);
    let r: Vec<f64> = w
        .iter()
        .enumerate()
        .map(|(i, y)| y - (b * (i + 1) as f64 + a))
        .collect();
    let lo = w.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = w.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if r.iter().all(|v| v.abs() <= 1e-9 * (hi - lo + 1.0)) {
        vec![0.0; w.len()]
    } else {
        r
    }
}

pub fn correlation(x: &[f64], y: &[f64]) -> Option<f64> {
    if x.iter().all(|v| *v == x[0]) || y.iter().all(|v| *v == y[0]) {
        return None;
    }
    let n = x.len() as f64;
    let xm = x.iter().sum::<f64>() / n;
    let ym = y.iter().sum::<f64>() / n;
    let num: f64 = (0..x.len()).map(|k| (x[k] - xm) * (y[k] - ym)).sum();
    let sx: f64 = (0..x.len()).map(|k| (x[k] - xm).powi(2)).sum();
    let sy: f64 = (0..y.len()).map(|k| (y[k] - ym).powi(2)).sum();
    let den = (sx * sy).sqrt();
    (den > 0.0).then(|| (num / den).clamp(-1.0, 1.0))
}

pub fn l1(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).abs()).sum()
}

/// Best `(start, score)` over all admissible starts, or `None` when every
/// candidate is undefined. Scores within 1e-12 (difference: scaled by
/// `N·max|x| + 1`) of the best tie, and the latest start wins.
pub fn best_match(
    values: &[f64],
    n: usize,
    p: usize,
    use_correlation: bool,
    detrend: bool,
) -> Option<(usize, f64)> {
    let k = values.len();
    assert!(k > n + p);
    let prep = |w: &[f64]| if detrend { residuals(w) } else { w.to_vec() };
    let query = prep(&values[k - n..]);
    let mut scored = Vec::new();
    for start in 1..=k - n - p + 1 {
        let cand = prep(&values[start - 1..start - 1 + n]);
        let score = if use_correlation {
            correlation(&query, &cand)
        } else {
            Some(l1(&query, &cand))
        };
        if let Some(s) = score {
            scored.push((start, s));
        }
    }
    let best = if use_correlation {
        scored.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max)
    } else {
        scored.iter().map(|s| s.1).fold(f64::INFINITY, f64::min)
    };
    let tol = if use_correlation {
        1e-12
    } else {
        let mag = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        1e-12 * (n as f64 * mag + 1.0)
    };
    scored
        .into_iter()
        .filter(|(_, s)| (s - best).abs() <= tol)
        .max_by_key(|(start, _)| *start)
}
