use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcher::SimilarityCriterion;

/// Whether windows are compared raw or after removing their own linear trend.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrendMode {
    #[default]
    None,
    Linear,
}

/// Settings for the phrase-matching forecasters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ForecastConfig {
    /// Forecast horizon `P`.
    pub horizon: usize,
    /// Window multiplier `M`; the window is `ceil(M * P)` values long.
    pub multiplier: f64,
    /// Explicit window length `N`. Overrides `multiplier` when set.
    pub window: Option<usize>,
    /// Number of quantization steps `S`.
    pub levels: usize,
    pub criterion: SimilarityCriterion,
    pub trend_mode: TrendMode,
}

impl ForecastConfig {
    /// Defaults: `M = 1`, `S = 32`, difference criterion, no trend handling.
    pub fn new(horizon: usize) -> Self {
        Self {
            horizon,
            multiplier: 1.0,
            window: None,
            levels: 32,
            criterion: SimilarityCriterion::Difference,
            trend_mode: TrendMode::None,
        }
    }

    pub fn multiplier(mut self, multiplier: f64) -> Self {
        self.multiplier = multiplier;
        self
    }

    pub fn window(mut self, window: usize) -> Self {
        self.window = Some(window);
        self
    }

    pub fn levels(mut self, levels: usize) -> Self {
        self.levels = levels;
        self
    }

    pub fn criterion(mut self, criterion: SimilarityCriterion) -> Self {
        self.criterion = criterion;
        self
    }

    pub fn trend_mode(mut self, trend_mode: TrendMode) -> Self {
        self.trend_mode = trend_mode;
        self
    }

    /// Checks the invariants and returns the window length `N`.
    pub fn window_length(&self) -> Result<usize> {
        if self.horizon < 1 {
            return Err(Error::InvalidConfig("horizon must be at least 1".into()));
        }
        if self.levels < 1 {
            return Err(Error::InvalidLevels(self.levels));
        }
        match self.window {
            Some(n) if n < 2 => Err(Error::WindowTooSmall(n)),
            Some(n) => Ok(n),
            None => derive_window_length(self.horizon, self.multiplier),
        }
    }
}

/// `N = ceil(M * P)`.
///
/// Products within a relative 1e-12 of an integer are taken as that integer,
/// so `M = 1.1, P = 10` gives 11 rather than 12.
pub fn derive_window_length(horizon: usize, multiplier: f64) -> Result<usize> {
    if horizon < 1 {
        return Err(Error::InvalidConfig("horizon must be at least 1".into()));
    }
    if !(multiplier.is_finite() && multiplier > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "multiplier must be a positive number, got {multiplier}"
        )));
    }
    let product = multiplier * horizon as f64;
    let nearest = product.round();
    let n = if (product - nearest).abs() <= 1e-12 * nearest.max(1.0) {
        nearest
    } else {
        product.ceil()
    };
    let n = n as usize;
    if n < 2 {
        return Err(Error::WindowTooSmall(n));
    }
    Ok(n)
}

/// Recommended multiplier interval for a horizon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MultiplierRange {
    pub low: f64,
    pub high: f64,
    pub low_inclusive: bool,
}

impl MultiplierRange {
    pub fn for_horizon(horizon: usize) -> Self {
        if horizon >= 5 {
            Self {
                low: 1.0,
                high: 2.0,
                low_inclusive: true,
            }
        } else {
            Self {
                low: 2.0,
                high: 5.0,
                low_inclusive: false,
            }
        }
    }

    pub fn contains(&self, m: f64) -> bool {
        let above = if self.low_inclusive {
            m >= self.low
        } else {
            m > self.low
        };
        above && m <= self.high
    }
}

impl fmt::Display for MultiplierRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.low_inclusive { '[' } else { '(' };
        write!(f, "{open}{}, {}]", self.low, self.high)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum MultiplierCheck {
    Ok,
    Warning {
        horizon: usize,
        multiplier: f64,
        recommended: MultiplierRange,
    },
}

impl MultiplierCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, MultiplierCheck::Ok)
    }
}

impl fmt::Display for MultiplierCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiplierCheck::Ok => write!(f, "multiplier within recommended range"),
            MultiplierCheck::Warning {
                horizon,
                multiplier,
                recommended,
            } => {
                let cmp = if *horizon >= 5 { ">=" } else { "<" };
                write!(
                    f,
                    "multiplier {multiplier} is outside the recommended range: \
                     recommended M in {recommended} for P {cmp} 5"
                )
            }
        }
    }
}

/// Advisory check of `M` against the horizon-dependent rule of thumb:
/// `1 <= M <= 2` for `P >= 5`, `2 < M <= 5` for `P < 5`.
pub fn validate_multiplier(horizon: usize, multiplier: f64) -> MultiplierCheck {
    let recommended = MultiplierRange::for_horizon(horizon);
    if recommended.contains(multiplier) {
        MultiplierCheck::Ok
    } else {
        MultiplierCheck::Warning {
            horizon,
            multiplier,
            recommended,
        }
    }
}

/// Smoothing coefficients for the Holt baseline.
///
/// `xi` weights the previous prediction in the level update and `phi` weights
/// the previous trend in the trend update, so larger values mean heavier
/// smoothing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HoltConfig {
    pub xi: f64,
    pub phi: f64,
}

impl HoltConfig {
    pub fn new(xi: f64, phi: f64) -> Result<Self> {
        for (name, v) in [("xi", xi), ("phi", phi)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must lie in [0, 1], got {v}"
                )));
            }
        }
        Ok(Self { xi, phi })
    }
}
