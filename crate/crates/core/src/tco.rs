//! Always-on versus with-shutdowns cost comparison.
//!
//! Costs over a horizon `T` (hours) split into fixed costs `F` and energy
//! costs `E`. Running always on costs `E_AO = T * P * p_avg`; shutting down
//! during the high-price region costs `E_WS = T * P * p_avg * (1 - k * x)`.
//! Cost per compute divides total cost by operational hours, and the
//! shutdown policy wins exactly when `k > psi + 1` with
//! `psi = F / E_AO`, whatever `x` is.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ingest::PriceSeries;
use crate::numeric::close;
use crate::pricemodel::{PriceSegmentation, VariabilityCurve};

const MEAN_TOLERANCE: f64 = 1e-9;

/// Fixed costs, horizon, power draw and average price of one system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostStructure {
    fixed_costs: f64,
    horizon_h: f64,
    power_mw: f64,
    p_avg: f64,
    psi: f64,
}

impl CostStructure {
    pub fn new(fixed_costs: f64, horizon_h: f64, power_mw: f64, p_avg: f64) -> Result<Self> {
        check_operating_point(horizon_h, power_mw, p_avg)?;
        if !(fixed_costs.is_finite() && fixed_costs >= 0.0) {
            return Err(Error::InvalidCost(format!("fixed costs must be >= 0, got {fixed_costs}")));
        }
        Ok(Self {
            fixed_costs,
            horizon_h,
            power_mw,
            p_avg,
            psi: fixed_costs / (horizon_h * power_mw * p_avg),
        })
    }

    /// Cost structure with a given `psi`; fixed costs follow from it.
    pub fn from_psi(psi: f64, horizon_h: f64, power_mw: f64, p_avg: f64) -> Result<Self> {
        check_operating_point(horizon_h, power_mw, p_avg)?;
        if !(psi.is_finite() && psi >= 0.0) {
            return Err(Error::InvalidCost(format!("psi must be >= 0, got {psi}")));
        }
        Ok(Self {
            fixed_costs: psi * horizon_h * power_mw * p_avg,
            horizon_h,
            power_mw,
            p_avg,
            psi,
        })
    }

    /// Horizon and average price taken from `series`.
    pub fn for_series(series: &PriceSeries, fixed_costs: f64, power_mw: f64) -> Result<Self> {
        Self::new(fixed_costs, series.horizon_hours(), power_mw, series.mean())
    }

    /// Same horizon, power and price with a different `psi`.
    pub fn with_psi(&self, psi: f64) -> Result<Self> {
        Self::from_psi(psi, self.horizon_h, self.power_mw, self.p_avg)
    }

    /// Fixed costs multiplied by `factor`; `psi` scales with them.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(Error::InvalidFactor(factor));
        }
        Ok(Self {
            fixed_costs: self.fixed_costs * factor,
            psi: self.psi * factor,
            ..*self
        })
    }

    pub fn fixed_costs(&self) -> f64 {
        self.fixed_costs
    }

    pub fn horizon_h(&self) -> f64 {
        self.horizon_h
    }

    pub fn power_mw(&self) -> f64 {
        self.power_mw
    }

    pub fn p_avg(&self) -> f64 {
        self.p_avg
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }

    /// Energy cost of the always-on policy, `T * P * p_avg`.
    pub fn energy_always_on(&self) -> f64 {
        self.horizon_h * self.power_mw * self.p_avg
    }

    /// Cost per operational hour of the always-on policy.
    pub fn cpc_always_on(&self) -> f64 {
        (self.fixed_costs + self.energy_always_on()) / self.horizon_h
    }

    fn check_mean(&self, p_avg: f64) -> Result<()> {
        if close(p_avg, self.p_avg, MEAN_TOLERANCE, 0.0) {
            Ok(())
        } else {
            Err(Error::MeanMismatch { segmentation: p_avg, cost: self.p_avg })
        }
    }
}

fn check_operating_point(horizon_h: f64, power_mw: f64, p_avg: f64) -> Result<()> {
    for (name, v) in [("horizon", horizon_h), ("power", power_mw), ("average price", p_avg)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::InvalidCost(format!("{name} must be > 0, got {v}")));
        }
    }
    Ok(())
}

/// Both policies evaluated at one segmentation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolicyAssessment {
    pub e_ao: f64,
    pub e_ws: f64,
    pub cpc_ao: f64,
    pub cpc_ws: f64,
    pub viable: bool,
    pub segmentation: PriceSegmentation,
}

/// Best shutdown fraction over a curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptimizationResult {
    pub psi: f64,
    pub x_be: Option<f64>,
    pub x_opt: Option<f64>,
    pub k_opt: Option<f64>,
    pub p_thresh_opt: Option<f64>,
    pub gain: Option<f64>,
    pub cpc_ao: f64,
    pub cpc_ws_opt: Option<f64>,
}

impl OptimizationResult {
    pub fn is_viable(&self) -> bool {
        self.x_opt.is_some()
    }
}

/// JSON summary shared by the `assess` and `optimize` outputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResultSummary {
    pub psi: Option<f64>,
    pub viability_bound_k: Option<f64>,
    pub x_be: Option<f64>,
    pub x_opt: Option<f64>,
    pub k_opt: Option<f64>,
    pub p_thresh_opt: Option<f64>,
    pub gain: Option<f64>,
    pub cpc_ao: Option<f64>,
    pub cpc_ws_opt: Option<f64>,
}

impl ResultSummary {
    /// Cost-structure fields only; optimization fields are null.
    pub fn for_cost(cost: &CostStructure) -> Self {
        Self {
            psi: Some(cost.psi()),
            viability_bound_k: Some(viability_bound(cost)),
            x_be: None,
            x_opt: None,
            k_opt: None,
            p_thresh_opt: None,
            gain: None,
            cpc_ao: Some(cost.cpc_always_on()),
            cpc_ws_opt: None,
        }
    }

    pub fn from_result(result: &OptimizationResult, cost: &CostStructure) -> Self {
        Self {
            x_be: result.x_be,
            x_opt: result.x_opt,
            k_opt: result.k_opt,
            p_thresh_opt: result.p_thresh_opt,
            gain: result.gain,
            cpc_ws_opt: result.cpc_ws_opt,
            ..Self::for_cost(cost)
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Minimum `k` at which shutdowns pay off: `psi + 1`.
pub fn viability_bound(cost: &CostStructure) -> f64 {
    cost.psi + 1.0
}

/// Compares always-on and with-shutdowns at `seg`.
pub fn assess(seg: &PriceSegmentation, cost: &CostStructure) -> Result<PolicyAssessment> {
    cost.check_mean(seg.p_avg)?;
    let t = cost.horizon_h;
    let e_ao = cost.energy_always_on();
    let e_ws = e_ao * (1.0 - seg.k * seg.x);
    Ok(PolicyAssessment {
        e_ao,
        e_ws,
        cpc_ao: (cost.fixed_costs + e_ao) / t,
        cpc_ws: (cost.fixed_costs + e_ws) / ((1.0 - seg.x) * t),
        viable: seg.k > viability_bound(cost),
        segmentation: *seg,
    })
}

/// `1 - CPC_WS / CPC_AO` at `seg`. Negative when shutting down hurts.
pub fn efficiency_gain(seg: &PriceSegmentation, cost: &CostStructure) -> Result<f64> {
    cost.check_mean(seg.p_avg)?;
    Ok(gain_at(seg, viability_bound(cost)))
}

// 1 - (b - k x) / (b (1 - x)) rearranged so the sign is that of k - b.
fn gain_at(seg: &PriceSegmentation, bound: f64) -> f64 {
    seg.x * (seg.k - bound) / (bound * (1.0 - seg.x))
}

/// Dimensionless objective `(1 - k x + psi) / (1 - x)`, proportional to
/// CPC_WS.
pub fn objective(seg: &PriceSegmentation, psi: f64) -> f64 {
    (1.0 - seg.k * seg.x + psi) / (1.0 - seg.x)
}

/// Largest grid fraction with `k > psi + 1`, if any.
pub fn break_even(curve: &VariabilityCurve, cost: &CostStructure) -> Result<Option<f64>> {
    cost.check_mean(curve.p_avg())?;
    let bound = viability_bound(cost);
    Ok(curve.points.iter().rev().find(|p| p.k > bound).map(|p| p.x))
}

/// Argmin of the objective over the curve, ties toward smaller `x`.
///
/// Everything optional is `None` when no grid point beats always-on.
pub fn optimize(curve: &VariabilityCurve, cost: &CostStructure) -> Result<OptimizationResult> {
    let x_be = break_even(curve, cost)?;
    let mut result = OptimizationResult {
        psi: cost.psi,
        x_be,
        x_opt: None,
        k_opt: None,
        p_thresh_opt: None,
        gain: None,
        cpc_ao: cost.cpc_always_on(),
        cpc_ws_opt: None,
    };
    if x_be.is_none() {
        return Ok(result);
    }
    let mut best: Option<(&PriceSegmentation, f64)> = None;
    for p in &curve.points {
        let f = objective(p, cost.psi);
        if best.is_none_or(|(_, fb)| f < fb) {
            best = Some((p, f));
        }
    }
    let (seg, _) = best.expect("curve has points");
    let at = assess(seg, cost)?;
    result.x_opt = Some(seg.x);
    result.k_opt = Some(seg.k);
    result.p_thresh_opt = Some(seg.p_thresh);
    result.gain = Some(gain_at(seg, viability_bound(cost)));
    result.cpc_ws_opt = Some(at.cpc_ws);
    Ok(result)
}

/// `(x, gain)` for every curve point.
pub fn gain_curve(curve: &VariabilityCurve, cost: &CostStructure) -> Result<Vec<(f64, f64)>> {
    cost.check_mean(curve.p_avg())?;
    let bound = viability_bound(cost);
    Ok(curve.points.iter().map(|p| (p.x, gain_at(p, bound))).collect())
}
