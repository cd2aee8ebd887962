use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input")]
    Empty,

    #[error("missing column `{0}`")]
    MissingColumn(String),

    #[error("line {line}, column `{column}`: {message}")]
    MalformedRow {
        line: u64,
        column: String,
        message: String,
    },

    #[error("line {line}, column `{column}`: `{value}` is not a number")]
    NonNumeric {
        line: u64,
        column: String,
        value: String,
    },

    #[error("line {line}: duplicate timestamp {timestamp}")]
    DuplicateTimestamp { line: u64, timestamp: String },

    #[error("line {line}: irregular spacing at {timestamp}, expected {expected_s} s but found {found_s} s")]
    IrregularSpacing {
        line: u64,
        timestamp: String,
        expected_s: i64,
        found_s: i64,
    },

    #[error("line {line}, column `{column}`: negative generation volume {value}")]
    NegativeVolume { line: u64, column: String, value: f64 },

    #[error("line {line}: fossil and renewable generation are both zero")]
    ZeroGeneration { line: u64 },

    #[error("series needs at least 2 samples, got {0}")]
    TooFewSamples(usize),

    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("target interval {target_s} s is not a positive multiple of {source_s} s")]
    IntervalMismatch { source_s: u64, target_s: u64 },

    #[error("invalid duration `{0}` (expected 1h, 1d, 1w or integer seconds)")]
    InvalidDuration(String),

    #[error("shutdown fraction {0} is outside (0, 1)")]
    FractionOutOfRange(f64),

    #[error("average price {0} is not positive; k is undefined")]
    NonPositiveMean(f64),

    #[error("invalid cost structure: {0}")]
    InvalidCost(String),

    #[error("average price mismatch: segmentation has {segmentation}, cost structure has {cost}")]
    MeanMismatch { segmentation: f64, cost: f64 },

    #[error("price series and generation mix are misaligned at sample {index}: {reason}")]
    Misaligned { index: usize, reason: String },

    #[error("scaling factor {0} must be positive")]
    InvalidFactor(f64),

    #[error("invalid psi grid: {0}")]
    InvalidPsiGrid(String),

    #[error("nothing to plot")]
    EmptyPlot,

    #[error("series `{label}` has non-positive value {value} on a logarithmic {axis} axis")]
    NonPositiveOnLogAxis {
        label: String,
        axis: &'static str,
        value: f64,
    },

    #[error("invalid plot data: {0}")]
    InvalidPlot(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
