use super::series::PriceSeries;
use crate::error::{Error, Result};
use crate::numeric;

/// Averages consecutive non-overlapping windows of `target_interval_s`.
///
/// Each output sample is stamped at its window start. A trailing partial
/// window is dropped.
pub fn resample(series: &PriceSeries, target_interval_s: u64) -> Result<PriceSeries> {
    let source_s = series.interval_s();
    if target_interval_s == 0 || !target_interval_s.is_multiple_of(source_s) {
        return Err(Error::IntervalMismatch { source_s, target_s: target_interval_s });
    }
    let window = (target_interval_s / source_s) as usize;
    let prices: Vec<f64> = series
        .prices()
        .chunks_exact(window)
        .map(numeric::mean)
        .collect();
    if prices.len() < 2 {
        return Err(Error::TooFewSamples(prices.len()));
    }
    PriceSeries::new(series.start(), target_interval_s, prices, series.currency())
}
