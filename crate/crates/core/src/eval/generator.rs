//! Synthetic seasonal series.
//!
//! `x_k = amplitude * sin(2π k / period + phase) + slope * k + quad * k² + u_k`
//! for `k = 1..=K`.
//!
//! The noise `u_k` is drawn from splitmix64 with its state initialised to the
//! seed (increment `0x9e3779b97f4a7c15`, mixing multipliers
//! `0xbf58476d1ce4e5b9` and `0x94d049bb133111eb`). Each 64-bit output `z`
//! becomes `U = (z >> 11) * 2^-53` in `[0, 1)` and `u = half_width * (2U - 1)`.
//! No draws are made when the half-width is zero.

use std::f64::consts::TAU;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TimeSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    Sinusoid,
    SinusoidLinearTrend,
    SinusoidNonlinearTrend,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub length: usize,
    /// Period in samples.
    pub period: f64,
    /// Half the peak-to-peak range of the seasonal component.
    pub amplitude: f64,
    pub slope: f64,
    pub quad: f64,
    /// Radians.
    pub phase: f64,
    pub noise: f64,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn sinusoid(length: usize, period: f64, amplitude: f64) -> Self {
        Self {
            kind: GeneratorKind::Sinusoid,
            length,
            period,
            amplitude,
            slope: 0.0,
            quad: 0.0,
            phase: 0.0,
            noise: 0.0,
            seed: 0,
        }
    }

    pub fn with_linear_trend(self, slope: f64) -> Self {
        Self {
            kind: GeneratorKind::SinusoidLinearTrend,
            slope,
            quad: 0.0,
            ..self
        }
    }

    pub fn with_quadratic_trend(self, slope: f64, quad: f64) -> Self {
        Self {
            kind: GeneratorKind::SinusoidNonlinearTrend,
            slope,
            quad,
            ..self
        }
    }

    pub fn with_noise(self, half_width: f64, seed: u64) -> Self {
        Self {
            noise: half_width,
            seed,
            ..self
        }
    }

    pub fn with_phase(self, phase: f64) -> Self {
        Self { phase, ..self }
    }

    pub fn with_length(self, length: usize) -> Self {
        Self { length, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.length < 1 {
            return bad("length must be at least 1".into());
        }
        if !(self.period.is_finite() && self.period > 0.0) {
            return bad(format!("period must be positive, got {}", self.period));
        }
        if !(self.amplitude.is_finite() && self.amplitude > 0.0) {
            return bad(format!(
                "amplitude must be positive, got {}",
                self.amplitude
            ));
        }
        if !(self.noise.is_finite() && self.noise >= 0.0) {
            return bad(format!("noise half-width must be >= 0, got {}", self.noise));
        }
        if !self.slope.is_finite() || !self.quad.is_finite() || !self.phase.is_finite() {
            return bad("slope, quad and phase must be finite".into());
        }
        match self.kind {
            GeneratorKind::Sinusoid if self.slope != 0.0 || self.quad != 0.0 => {
                bad("a plain sinusoid takes no slope or quadratic term".into())
            }
            GeneratorKind::SinusoidLinearTrend if self.quad != 0.0 => {
                bad("a linear-trend sinusoid takes no quadratic term".into())
            }
            _ => Ok(()),
        }
    }

    /// Noise-free value at 1-based position `k`. Defined for any `k`, so it
    /// also gives the analytic continuation past `length`.
    pub fn clean_value(&self, k: usize) -> f64 {
        let x = k as f64;
        self.amplitude * (TAU * x / self.period + self.phase).sin()
            + self.slope * x
            + self.quad * x * x
    }

    /// Noise-free values at positions `from..=to`.
    pub fn clean_values(&self, from: usize, to: usize) -> Vec<f64> {
        (from..=to).map(|k| self.clean_value(k)).collect()
    }
}

/// Uniform noise on `[-half_width, half_width)`.
#[derive(Debug, Clone)]
pub struct UniformNoise {
    rng: SplitMix64,
    half_width: f64,
}

impl UniformNoise {
    pub fn new(seed: u64, half_width: f64) -> Self {
        Self {
            rng: SplitMix64::from_seed(seed.to_le_bytes()),
            half_width,
        }
    }

    pub fn sample(&mut self) -> f64 {
        let unit = (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        self.half_width * (2.0 * unit - 1.0)
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<TimeSeries> {
    spec.validate()?;
    let mut noise = (spec.noise > 0.0).then(|| UniformNoise::new(spec.seed, spec.noise));
    let values = (1..=spec.length)
        .map(|k| spec.clean_value(k) + noise.as_mut().map_or(0.0, UniformNoise::sample))
        .collect();
    TimeSeries::new(values)
}
