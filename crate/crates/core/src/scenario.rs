//! Hypothetical price series and cost structures.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ingest::{GenerationMix, PriceSeries};
use crate::pricemodel::VariabilityCurve;
use crate::tco::{optimize, CostStructure};

/// Multiplier for positive prices in fully renewable hours.
pub const RENEWABLE_FACTOR: f64 = 0.5;
/// Multiplier for positive prices in fully fossil hours.
pub const FOSSIL_FACTOR: f64 = 2.0;

/// A price series with variability amplified by the fossil share of
/// generation.
#[derive(Debug, Clone)]
pub struct AmplifiedSeries<'a> {
    pub base: &'a PriceSeries,
    pub mix: &'a GenerationMix,
    pub result: PriceSeries,
}

/// Amplified price for one sample.
///
/// Non-positive prices pass through. Positive prices are blended between
/// halving (renewable) and doubling (fossil) by the fossil share `beta`.
pub fn amplify_price(price: f64, beta: f64) -> f64 {
    if price <= 0.0 {
        price
    } else {
        price * (1.0 - beta) * RENEWABLE_FACTOR + price * beta * FOSSIL_FACTOR
    }
}

/// Applies [`amplify_price`] sample by sample. `series` and `mix` must share
/// timestamps exactly.
pub fn amplify<'a>(series: &'a PriceSeries, mix: &'a GenerationMix) -> Result<AmplifiedSeries<'a>> {
    if series.interval_s() != mix.interval_s() {
        return Err(Error::Misaligned {
            index: 0,
            reason: format!(
                "interval {} s vs {} s",
                series.interval_s(),
                mix.interval_s()
            ),
        });
    }
    if series.len() != mix.len() || series.start() != mix.start() {
        let index = if series.start() != mix.start() { 0 } else { series.len().min(mix.len()) };
        return Err(Error::Misaligned {
            index,
            reason: format!(
                "series covers {} samples from {}, mix covers {} from {}",
                series.len(),
                series.start(),
                mix.len(),
                mix.start()
            ),
        });
    }
    let prices = series
        .prices()
        .iter()
        .enumerate()
        .map(|(i, &p)| amplify_price(p, mix.fossil_share(i)))
        .collect();
    Ok(AmplifiedSeries {
        base: series,
        mix,
        result: series.with_prices(prices)?,
    })
}

/// Fixed costs (and `psi`) multiplied by `factor`.
pub fn scale_fixed_costs(cost: &CostStructure, factor: f64) -> Result<CostStructure> {
    cost.scaled(factor)
}

/// Best-case efficiency gain for each `psi`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsiSweep {
    pub psi_values: Vec<f64>,
    pub gains: Vec<f64>,
}

impl PsiSweep {
    /// CSV with header `psi,gain`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("psi,gain\n");
        for (psi, gain) in self.psi_values.iter().zip(&self.gains) {
            out.push_str(&format!("{psi},{gain}\n"));
        }
        out
    }

    pub fn points(&self) -> Vec<(f64, f64)> {
        self.psi_values.iter().copied().zip(self.gains.iter().copied()).collect()
    }
}

/// `points` log-spaced values over `[from, to]`, both ends included.
pub fn log_grid(from: f64, to: f64, points: usize) -> Result<Vec<f64>> {
    if !(from.is_finite() && to.is_finite() && from > 0.0 && to >= from) {
        return Err(Error::InvalidPsiGrid(format!("need 0 < from <= to, got [{from}, {to}]")));
    }
    match points {
        0 => Err(Error::InvalidPsiGrid("need at least one point".into())),
        1 => Ok(vec![from]),
        _ => {
            let ratio = (to / from).ln();
            let last = (points - 1) as f64;
            Ok((0..points)
                .map(|i| match i {
                    0 => from,
                    i if i == points - 1 => to,
                    i => from * (ratio * i as f64 / last).exp(),
                })
                .collect())
        }
    }
}

/// The default grid: 50 log-spaced points over `[0.1, 10]`.
pub fn default_psi_grid() -> Vec<f64> {
    log_grid(0.1, 10.0, 50).expect("valid grid")
}

/// Optimal gain per `psi`, 0 where no shutdown fraction pays off.
pub fn sweep_psi(curve: &VariabilityCurve, base_cost: &CostStructure, psi_values: &[f64]) -> Result<PsiSweep> {
    if psi_values.is_empty() {
        return Err(Error::InvalidPsiGrid("no psi values".into()));
    }
    if let Some(bad) = psi_values.iter().find(|p| !(p.is_finite() && **p > 0.0)) {
        return Err(Error::InvalidPsiGrid(format!("psi values must be positive, got {bad}")));
    }
    if psi_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidPsiGrid("psi values must be strictly ascending".into()));
    }
    let gains = psi_values
        .iter()
        .map(|&psi| {
            let cost = base_cost.with_psi(psi)?;
            Ok(optimize(curve, &cost)?.gain.unwrap_or(0.0))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(PsiSweep {
        psi_values: psi_values.to_vec(),
        gains,
    })
}
