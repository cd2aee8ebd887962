//! Break-even and optimal shutdown fractions for several cost structures.
//!
//! ```text
//! cargo run --example optimize_shutdowns [-- prices.csv]
//! ```

mod common;

use varcap::pricemodel::variability_curve;
use varcap::report::summarize;
use varcap::tco::{optimize, CostStructure};

fn main() -> varcap::Result<()> {
    let series = common::prices_or_synthetic(std::env::args().nth(1));
    let curve = variability_curve(&series)?;

    for psi in [0.25, 1.0, 2.0, 4.0] {
        let cost = CostStructure::from_psi(psi, series.horizon_hours(), 1.0, curve.p_avg())?;
        let result = optimize(&curve, &cost)?;
        let summary = summarize(&result, &cost)?;
        println!("{}\n", summary.text);
    }

    let cost = CostStructure::from_psi(2.0, series.horizon_hours(), 1.0, curve.p_avg())?;
    println!("{}", summarize(&optimize(&curve, &cost)?, &cost)?.json);
    Ok(())
}
