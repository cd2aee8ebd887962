//! Maximum achievable gain as the share of fixed costs grows.
//!
//! ```text
//! cargo run --example psi_sweep [-- prices.csv]
//! ```

mod common;

use varcap::pricemodel::variability_curve;
use varcap::scenario::{default_psi_grid, sweep_psi};
use varcap::tco::CostStructure;

fn main() -> varcap::Result<()> {
    let series = common::prices_or_synthetic(std::env::args().nth(1));
    let curve = variability_curve(&series)?;
    let base = CostStructure::from_psi(1.0, series.horizon_hours(), 1.0, curve.p_avg())?;
    let sweep = sweep_psi(&curve, &base, &default_psi_grid())?;

    for (psi, gain) in sweep.points().into_iter().step_by(7) {
        let bar = "#".repeat((gain * 400.0).round() as usize);
        println!("psi {psi:>7.3}  gain {:>6.2}%  {bar}", gain * 100.0);
    }
    match sweep.points().into_iter().find(|&(_, g)| g == 0.0) {
        Some((psi, _)) => println!("\nno shutdown pays off from psi = {psi:.3}"),
        None => println!("\nshutdowns pay off across the whole grid"),
    }
    Ok(())
}
