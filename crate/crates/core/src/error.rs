use thiserror::Error;

/// Errors produced by the forecasting library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("time series must contain at least one value")]
    EmptySeries,

    #[error("non-finite value {value} at position {position}")]
    NonFinite { position: usize, value: f64 },

    #[error("cannot quantize: series is constant (min == max == {value})")]
    DegenerateRange { value: f64 },

    #[error("number of quantization levels must be at least 1, got {0}")]
    InvalidLevels(usize),

    #[error("linear trend needs at least 2 points, got {0}")]
    InsufficientPoints(usize),

    #[error("sequences must have equal length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("correlation undefined: a sequence has zero variance")]
    UndefinedCorrelation,

    #[error("series too short: need at least {required} values, got {actual}")]
    SeriesTooShort { required: usize, actual: usize },

    #[error("no valid candidate window: every candidate has an undefined score")]
    NoValidCandidate,

    #[error("window length must be at least 2, got {0}")]
    WindowTooSmall(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
