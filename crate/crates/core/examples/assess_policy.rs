//! Compare always-on against shutting down during the most expensive hours
//! for a concrete cluster.
//!
//! ```text
//! cargo run --example assess_policy [-- prices.csv]
//! ```

mod common;

use varcap::pricemodel::segment;
use varcap::report::describe_assessment;
use varcap::tco::{assess, efficiency_gain, viability_bound, CostStructure};

fn main() -> varcap::Result<()> {
    let series = common::prices_or_synthetic(std::env::args().nth(1));

    // 5 MW cluster whose yearly write-off, cooling and staff cost 6.5 M
    let cost = CostStructure::for_series(&series, 6.5e6, 5.0)?;
    println!(
        "E_AO = {:.0}, psi = {:.3}: shutting down pays off only where k > {:.3}\n",
        cost.energy_always_on(),
        cost.psi(),
        viability_bound(&cost)
    );

    for x in [0.002, 0.01, 0.05] {
        let seg = segment(&series, x)?;
        let a = assess(&seg, &cost)?;
        println!("{}", describe_assessment(&a, &cost));
        println!("  efficiency gain {:+.3}%\n", efficiency_gain(&seg, &cost)? * 100.0);
    }
    Ok(())
}
