//! Splitting a price series into high- and low-price regions.
//!
//! For a shutdown fraction `x` the high region holds the `round(x * n)`
//! most expensive samples. Ties at the threshold price go to the earlier
//! sample first. `p_thresh` is the cheapest price inside the high region,
//! so `p_low <= p_thresh <= p_high` and the weighted-mean identity
//! `p_avg = x * p_high + (1 - x) * p_low` holds up to rounding.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ingest::PriceSeries;
use crate::numeric::CompensatedSum;

/// One split of a series into high- and low-price regions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PriceSegmentation {
    /// Shutdown fraction, exactly `high_count / sample_count`.
    pub x: f64,
    pub k: f64,
    pub p_thresh: f64,
    pub p_high: f64,
    pub p_low: f64,
    pub p_avg: f64,
    pub high_count: usize,
    pub sample_count: usize,
}

impl PriceSegmentation {
    pub fn low_count(&self) -> usize {
        self.sample_count - self.high_count
    }
}

/// The k–x line of a series: one segmentation per grid point `i / n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VariabilityCurve {
    pub points: Vec<PriceSegmentation>,
    pub source_interval_s: u64,
}

impl VariabilityCurve {
    pub fn p_avg(&self) -> f64 {
        self.points[0].p_avg
    }

    pub fn sample_count(&self) -> usize {
        self.points[0].sample_count
    }

    /// Point with exactly `high_count` samples in the high region.
    pub fn at_count(&self, high_count: usize) -> Option<&PriceSegmentation> {
        high_count.checked_sub(1).and_then(|i| self.points.get(i))
    }

    /// CSV with header `x,k,p_thresh,p_high,p_low`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,k,p_thresh,p_high,p_low\n");
        for p in &self.points {
            out.push_str(&format!("{},{},{},{},{}\n", p.x, p.k, p.p_thresh, p.p_high, p.p_low));
        }
        out
    }

    /// JSON array of point objects.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.points)?)
    }
}

/// Samples ranked by descending price with prefix sums over the ranking.
#[derive(Debug, Clone)]
pub struct PriceRanking {
    order: Vec<usize>,
    sorted: Vec<f64>,
    // high_sums[h] = sum of the h most expensive prices
    high_sums: Vec<f64>,
    // low_sums[h] = sum of the n - h cheapest prices
    low_sums: Vec<f64>,
    p_avg: f64,
    interval_s: u64,
}

impl PriceRanking {
    pub fn new(series: &PriceSeries) -> Result<Self> {
        let prices = series.prices();
        let n = prices.len();
        let mut order: Vec<usize> = (0..n).collect();
        // stable sort keeps earlier samples first among equal prices
        order.sort_by(|&a, &b| prices[b].total_cmp(&prices[a]));
        let sorted: Vec<f64> = order.iter().map(|&i| prices[i]).collect();

        let mut high_sums = Vec::with_capacity(n + 1);
        let mut acc = CompensatedSum::new();
        high_sums.push(0.0);
        for &p in &sorted {
            acc.add(p);
            high_sums.push(acc.value());
        }
        let mut low_sums = vec![0.0; n + 1];
        let mut acc = CompensatedSum::new();
        for h in (0..n).rev() {
            acc.add(sorted[h]);
            low_sums[h] = acc.value();
        }

        let p_avg = low_sums[0] / n as f64;
        if p_avg <= 0.0 {
            return Err(Error::NonPositiveMean(p_avg));
        }
        Ok(Self {
            order,
            sorted,
            high_sums,
            low_sums,
            p_avg,
            interval_s: series.interval_s(),
        })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn p_avg(&self) -> f64 {
        self.p_avg
    }

    /// Prices in ranking order, most expensive first.
    pub fn sorted_prices(&self) -> &[f64] {
        &self.sorted
    }

    /// Sample indices of the high region for `high_count`, in ranking order.
    pub fn high_region(&self, high_count: usize) -> &[usize] {
        &self.order[..high_count.min(self.order.len())]
    }

    /// Segmentation with `high_count` samples in the high region.
    ///
    /// Panics unless `1 <= high_count <= n - 1`.
    pub fn segment_count(&self, high_count: usize) -> PriceSegmentation {
        let n = self.sorted.len();
        assert!(
            (1..n).contains(&high_count),
            "high_count {high_count} outside 1..{n}"
        );
        let low_count = n - high_count;
        let p_high = self.high_sums[high_count] / high_count as f64;
        let p_low = self.low_sums[high_count] / low_count as f64;
        PriceSegmentation {
            x: high_count as f64 / n as f64,
            k: p_high / self.p_avg,
            p_thresh: self.sorted[high_count - 1],
            p_high,
            p_low,
            p_avg: self.p_avg,
            high_count,
            sample_count: n,
        }
    }

    pub fn curve(&self) -> VariabilityCurve {
        VariabilityCurve {
            points: (1..self.sorted.len()).map(|h| self.segment_count(h)).collect(),
            source_interval_s: self.interval_s,
        }
    }
}

/// Grid index for a requested fraction: `round(x * n)` clamped to `[1, n-1]`.
pub fn snap_fraction(x: f64, n: usize) -> Result<usize> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::FractionOutOfRange(x));
    }
    let i = (x * n as f64).round() as usize;
    Ok(i.clamp(1, n - 1))
}

/// Splits `series` at shutdown fraction `x`. The reported `x` is the snapped
/// grid value.
pub fn segment(series: &PriceSeries, x: f64) -> Result<PriceSegmentation> {
    let high_count = snap_fraction(x, series.len())?;
    Ok(PriceRanking::new(series)?.segment_count(high_count))
}

/// Segmentations for every `x = i / n`, `i = 1..n-1`.
pub fn variability_curve(series: &PriceSeries) -> Result<VariabilityCurve> {
    Ok(PriceRanking::new(series)?.curve())
}
