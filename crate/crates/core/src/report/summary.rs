use crate::error::Result;
use crate::tco::{viability_bound, CostStructure, OptimizationResult, PolicyAssessment, ResultSummary};

/// Verdict text plus the JSON summary document.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub text: String,
    pub json: String,
}

fn percent(v: f64) -> String {
    format!("{:.2}%", v * 100.0)
}

pub fn summarize(result: &OptimizationResult, cost: &CostStructure) -> Result<Summary> {
    let bound = viability_bound(cost);
    let text = match (result.x_be, result.x_opt, result.k_opt, result.gain, result.p_thresh_opt) {
        (Some(x_be), Some(x_opt), Some(k_opt), Some(gain), Some(thresh)) => format!(
            "At Ψ={:.2} shutdowns pay off whenever k exceeds {:.2}. Shutdowns are viable up to x_be = {} of the time; \
             the optimum is x_opt = {:.4}% (k = {:.4}) with an efficiency gain of {} over always-on, \
             shutting down whenever the price exceeds the threshold {:.2} per MWh.",
            cost.psi(),
            bound,
            percent(x_be),
            x_opt * 100.0,
            k_opt,
            percent(gain),
            thresh
        ),
        _ => format!(
            "Shutdowns are never beneficial at Ψ={:.2}: k never exceeds the bound {:.2} for any shutdown fraction.",
            cost.psi(),
            bound
        ),
    };
    Ok(Summary {
        text,
        json: ResultSummary::from_result(result, cost).to_json()?,
    })
}

/// One-line description of a single assessment.
pub fn describe_assessment(a: &PolicyAssessment, cost: &CostStructure) -> String {
    let seg = &a.segmentation;
    let verdict = if a.viable { "beneficial" } else { "not beneficial" };
    format!(
        "At x = {:.4}% (k = {:.4}, threshold {:.2}) shutdowns are {verdict} at Ψ={:.2}: \
         cost per hour {:.4} with shutdowns versus {:.4} always on.",
        seg.x * 100.0,
        seg.k,
        seg.p_thresh,
        cost.psi(),
        a.cpc_ws,
        a.cpc_ao
    )
}
