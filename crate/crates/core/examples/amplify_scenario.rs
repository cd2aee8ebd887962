//! A more volatile market: positive prices are halved when renewables
//! dominate and doubled when fossil plants set the price. Combined with
//! cheaper hardware, shutdowns become worthwhile much earlier.
//!
//! ```text
//! cargo run --example amplify_scenario
//! ```

mod common;

use varcap::pricemodel::variability_curve;
use varcap::report::summarize;
use varcap::scenario::{amplify, scale_fixed_costs};
use varcap::tco::{optimize, CostStructure};

fn main() -> varcap::Result<()> {
    let series = common::synthetic_year();
    let mix = common::synthetic_mix(&series);
    let amplified = amplify(&series, &mix)?.result;
    println!("mean price {:.2} -> {:.2}", series.mean(), amplified.mean());

    for (label, s, factor) in [("today", &series, 1.0), ("amplified, fixed costs -20%", &amplified, 0.8)] {
        let curve = variability_curve(s)?;
        let base = CostStructure::from_psi(2.0, s.horizon_hours(), 1.0, curve.p_avg())?;
        let cost = scale_fixed_costs(&base, factor)?;
        let summary = summarize(&optimize(&curve, &cost)?, &cost)?;
        println!("\n{label}:\n{}", summary.text);
    }
    Ok(())
}
