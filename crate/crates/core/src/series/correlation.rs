use crate::error::{Error, Result};

/// Sample Pearson correlation of two equal-length sequences, clamped to
/// `[-1, 1]`.
///
/// Returns [`Error::UndefinedCorrelation`] when either side has zero variance.
pub fn pearson(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len();
    if n < 2 {
        return Err(Error::InsufficientPoints(n));
    }
    if is_flat(a) || is_flat(b) {
        return Err(Error::UndefinedCorrelation);
    }
    let nf = n as f64;
    let a_mean = a.iter().sum::<f64>() / nf;
    let b_mean = b.iter().sum::<f64>() / nf;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (&x, &y) in a.iter().zip(b) {
        let dx = x - a_mean;
        let dy = y - b_mean;
        sab += dx * dy;
        saa += dx * dx;
        sbb += dy * dy;
    }
    let denom = (saa * sbb).sqrt();
    if denom == 0.0 || !denom.is_finite() {
        return Err(Error::UndefinedCorrelation);
    }
    Ok((sab / denom).clamp(-1.0, 1.0))
}

fn is_flat(v: &[f64]) -> bool {
    v.iter().all(|&x| x == v[0])
}
