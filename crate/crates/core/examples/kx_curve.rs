//! k-x lines at hourly, daily and weekly resolution. Coarser sampling
//! averages away the peaks, so k falls at every x.
//!
//! ```text
//! cargo run --example kx_curve [-- prices.csv [out_dir]]
//! ```

mod common;

use std::path::PathBuf;

use varcap::ingest::resample;
use varcap::pricemodel::variability_curve;
use varcap::report::{kx_points, render, PlotKind, PlotSpec};

fn main() -> varcap::Result<()> {
    let mut args = std::env::args().skip(1);
    let series = common::prices_or_synthetic(args.next());
    let out = PathBuf::from(args.next().unwrap_or_else(|| "target/examples-out".into()));
    std::fs::create_dir_all(&out)?;

    let mut spec = PlotSpec::new(PlotKind::KxLine).title("k-x line by sampling interval");
    let mut data = Vec::new();
    for (label, interval) in [("1 h", 3600), ("1 d", 86_400), ("1 w", 604_800)] {
        let s = if interval == series.interval_s() { series.clone() } else { resample(&series, interval)? };
        let curve = variability_curve(&s)?;
        let top = &curve.points[0];
        println!("{label}: {} points, k at x={:.4}% is {:.3}", curve.points.len(), top.x * 100.0, top.k);
        spec = spec.label(label);
        data.push(kx_points(&curve));
    }
    // a psi=2 cost structure is viable only above k = 3
    let plot = render(&spec.viability_band(3.0), &data)?;
    std::fs::write(out.join("kx.svg"), &plot.svg)?;
    std::fs::write(out.join("kx.csv"), &plot.csv)?;
    println!("wrote {}", out.join("kx.svg").display());
    Ok(())
}
