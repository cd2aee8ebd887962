//! Split a price series into high and low regions at a few shutdown
//! fractions and show how the high-price mean relates to the overall mean.
//!
//! ```text
//! cargo run --example segment_prices [-- prices.csv]
//! ```

mod common;

use varcap::pricemodel::segment;

fn main() -> varcap::Result<()> {
    let series = common::prices_or_synthetic(std::env::args().nth(1));
    println!("{} samples, mean {:.2} {}/MWh\n", series.len(), series.mean(), series.currency());
    println!("{:>8} {:>6} {:>10} {:>10} {:>10} {:>8}", "x", "hours", "p_thresh", "p_high", "p_low", "k");
    for x in [0.001, 0.005, 0.01, 0.05, 0.1, 0.25, 0.5] {
        let s = segment(&series, x)?;
        println!(
            "{:>7.2}% {:>6} {:>10.2} {:>10.2} {:>10.2} {:>8.4}",
            s.x * 100.0,
            s.high_count,
            s.p_thresh,
            s.p_high,
            s.p_low,
            s.k
        );
    }
    Ok(())
}
