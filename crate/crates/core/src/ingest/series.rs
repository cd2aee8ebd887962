use chrono::{DateTime, Duration, Utc};
use serde::{Deserialize, Serialize};

use super::time::{format_rfc3339, parse_rfc3339};
use crate::error::{Error, Result};
use crate::numeric;

/// Electricity prices sampled at a fixed interval.
///
/// Timestamps are implied by `start + i * interval`, so they are strictly
/// increasing with constant spacing by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PriceSeries {
    start: DateTime<Utc>,
    interval_s: u64,
    prices: Vec<f64>,
    currency: String,
}

impl PriceSeries {
    pub fn new(
        start: DateTime<Utc>,
        interval_s: u64,
        prices: Vec<f64>,
        currency: impl Into<String>,
    ) -> Result<Self> {
        if interval_s == 0 {
            return Err(Error::InvalidSeries("sampling interval must be positive".into()));
        }
        if prices.len() < 2 {
            return Err(Error::TooFewSamples(prices.len()));
        }
        if let Some(i) = prices.iter().position(|p| !p.is_finite()) {
            return Err(Error::InvalidSeries(format!("price at sample {i} is not finite")));
        }
        Ok(Self {
            start,
            interval_s,
            prices,
            currency: currency.into(),
        })
    }

    /// Builds a series from timestamped samples in any order.
    ///
    /// The interval is `declared_interval_s` when given, otherwise the gap
    /// between the two earliest samples.
    pub fn from_samples(
        samples: Vec<(DateTime<Utc>, f64)>,
        declared_interval_s: Option<u64>,
        currency: impl Into<String>,
    ) -> Result<Self> {
        let rows = samples
            .into_iter()
            .enumerate()
            .map(|(i, (ts, price))| Row { ts, line: i as u64 + 1, value: price })
            .collect();
        let (start, interval_s, prices) = regularize(rows, declared_interval_s)?;
        Self::new(start, interval_s, prices, currency)
    }

    pub fn start(&self) -> DateTime<Utc> {
        self.start
    }

    pub fn interval_s(&self) -> u64 {
        self.interval_s
    }

    pub fn len(&self) -> usize {
        self.prices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prices.is_empty()
    }

    pub fn prices(&self) -> &[f64] {
        &self.prices
    }

    pub fn currency(&self) -> &str {
        &self.currency
    }

    pub fn timestamp(&self, index: usize) -> DateTime<Utc> {
        self.start + Duration::seconds(self.interval_s as i64 * index as i64)
    }

    pub fn samples(&self) -> impl Iterator<Item = (DateTime<Utc>, f64)> + '_ {
        self.prices
            .iter()
            .enumerate()
            .map(|(i, &p)| (self.timestamp(i), p))
    }

    /// Mean price over all samples.
    pub fn mean(&self) -> f64 {
        numeric::mean(&self.prices)
    }

    /// Horizon covered by the series, `n * interval`, in hours.
    pub fn horizon_hours(&self) -> f64 {
        self.prices.len() as f64 * self.interval_s as f64 / 3600.0
    }

    /// Same timestamps and currency with new prices.
    pub fn with_prices(&self, prices: Vec<f64>) -> Result<Self> {
        if prices.len() != self.prices.len() {
            return Err(Error::InvalidSeries(format!(
                "expected {} prices, got {}",
                self.prices.len(),
                prices.len()
            )));
        }
        Self::new(self.start, self.interval_s, prices, self.currency.clone())
    }

    pub fn to_canonical_json(&self) -> Result<String> {
        let doc = CanonicalSeries {
            interval_s: self.interval_s,
            currency: self.currency.clone(),
            start: format_rfc3339(&self.start),
            prices: self.prices.clone(),
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    pub fn from_canonical_json(text: &str) -> Result<Self> {
        let doc: CanonicalSeries = serde_json::from_str(text)?;
        let start = parse_rfc3339(&doc.start).ok_or_else(|| Error::MalformedRow {
            line: 0,
            column: "start".into(),
            message: format!("`{}` is not an RFC 3339 timestamp", doc.start),
        })?;
        Self::new(start, doc.interval_s, doc.prices, doc.currency)
    }

    /// Generic `timestamp,price` CSV.
    pub fn to_generic_csv(&self) -> String {
        let mut out = String::from("timestamp,price\n");
        for (ts, p) in self.samples() {
            out.push_str(&format_rfc3339(&ts));
            out.push(',');
            out.push_str(&p.to_string());
            out.push('\n');
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CanonicalSeries {
    interval_s: u64,
    currency: String,
    start: String,
    prices: Vec<f64>,
}

/// Fossil and renewable generation volumes at a fixed interval.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationMix {
    start: DateTime<Utc>,
    interval_s: u64,
    fossil: Vec<f64>,
    renewable: Vec<f64>,
}

impl GenerationMix {
    pub fn new(
        start: DateTime<Utc>,
        interval_s: u64,
        fossil: Vec<f64>,
        renewable: Vec<f64>,
    ) -> Result<Self> {
        if interval_s == 0 {
            return Err(Error::InvalidSeries("sampling interval must be positive".into()));
        }
        if fossil.len() != renewable.len() {
            return Err(Error::InvalidSeries("fossil and renewable lengths differ".into()));
        }
        if fossil.is_empty() {
            return Err(Error::Empty);
        }
        for (i, (&f, &r)) in fossil.iter().zip(&renewable).enumerate() {
            let line = i as u64 + 1;
            for (column, v) in [("fossil", f), ("renewable", r)] {
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::NegativeVolume { line, column: column.into(), value: v });
                }
            }
            if f + r <= 0.0 {
                return Err(Error::ZeroGeneration { line });
            }
        }
        Ok(Self {
            start,
            interval_s,
            fossil,
            renewable,
        })
    }

    pub fn start(&self) -> DateTime<Utc> {
        self.start
    }

    pub fn interval_s(&self) -> u64 {
        self.interval_s
    }

    pub fn len(&self) -> usize {
        self.fossil.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fossil.is_empty()
    }

    pub fn fossil(&self) -> &[f64] {
        &self.fossil
    }

    pub fn renewable(&self) -> &[f64] {
        &self.renewable
    }

    pub fn timestamp(&self, index: usize) -> DateTime<Utc> {
        self.start + Duration::seconds(self.interval_s as i64 * index as i64)
    }

    /// Fossil share of generation, `fossil / (fossil + renewable)`.
    pub fn fossil_share(&self, index: usize) -> f64 {
        let f = self.fossil[index];
        f / (f + self.renewable[index])
    }
}

/// One parsed row before regularization.
pub(crate) struct Row<T> {
    pub ts: DateTime<Utc>,
    pub line: u64,
    pub value: T,
}

/// Sorts rows by time and checks for duplicates and gaps.
///
/// Returns the first timestamp, the interval in seconds, and the values in
/// time order.
pub(crate) fn regularize<T>(
    mut rows: Vec<Row<T>>,
    declared_interval_s: Option<u64>,
) -> Result<(DateTime<Utc>, u64, Vec<T>)> {
    if rows.is_empty() {
        return Err(Error::Empty);
    }
    rows.sort_by_key(|r| r.ts);
    if rows.len() < 2 {
        return Err(Error::TooFewSamples(rows.len()));
    }
    let expected_s = match declared_interval_s {
        Some(0) => return Err(Error::InvalidSeries("sampling interval must be positive".into())),
        Some(s) => s as i64,
        None => (rows[1].ts - rows[0].ts).num_seconds(),
    };
    for pair in rows.windows(2) {
        let (prev, cur) = (&pair[0], &pair[1]);
        let gap = cur.ts - prev.ts;
        if gap.is_zero() {
            return Err(Error::DuplicateTimestamp {
                line: cur.line.max(prev.line),
                timestamp: format_rfc3339(&cur.ts),
            });
        }
        if gap.num_seconds() != expected_s || gap.subsec_nanos() != 0 {
            return Err(Error::IrregularSpacing {
                line: cur.line,
                timestamp: format_rfc3339(&cur.ts),
                expected_s,
                found_s: gap.num_seconds(),
            });
        }
    }
    let start = rows[0].ts;
    Ok((start, expected_s as u64, rows.into_iter().map(|r| r.value).collect()))
}
