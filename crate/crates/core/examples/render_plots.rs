//! Every plot kind, written as SVG with CSV sidecars.
//!
//! ```text
//! cargo run --example render_plots [-- out_dir]
//! ```

mod common;

use std::path::PathBuf;

use varcap::pricemodel::variability_curve;
use varcap::report::{chronological_points, render, survival_points, Annotation, PlotKind, PlotSpec};
use varcap::scenario::{default_psi_grid, sweep_psi};
use varcap::tco::{gain_curve, optimize, CostStructure};

fn main() -> varcap::Result<()> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/examples-out".into()));
    std::fs::create_dir_all(&out)?;
    let series = common::synthetic_year();
    let curve = variability_curve(&series)?;

    let mut plots = vec![
        ("prices", render(&PlotSpec::new(PlotKind::PriceChronological).label("2024"), &[chronological_points(&series)])?),
        ("survival", render(&PlotSpec::new(PlotKind::PriceSurvival).label("2024"), &[survival_points(&series)])?),
    ];

    let mut spec = PlotSpec::new(PlotKind::EfficiencyVsX);
    let mut gains = Vec::new();
    for (i, psi) in [0.5, 1.0, 2.0].into_iter().enumerate() {
        let cost = CostStructure::from_psi(psi, series.horizon_hours(), 1.0, curve.p_avg())?;
        let r = optimize(&curve, &cost)?;
        spec = spec.label(format!("Ψ = {psi}"));
        if let (Some(x), Some(g)) = (r.x_opt, r.gain) {
            spec = spec.annotate(Annotation { x, y: Some(g), label: "optimum".into(), series: Some(i) });
        }
        gains.push(gain_curve(&curve, &cost)?);
    }
    plots.push(("efficiency", render(&spec, &gains)?));

    let base = CostStructure::from_psi(1.0, series.horizon_hours(), 1.0, curve.p_avg())?;
    let sweep = sweep_psi(&curve, &base, &default_psi_grid())?;
    plots.push(("psi_sweep", render(&PlotSpec::new(PlotKind::PsiSweep).label("1 h"), &[sweep.points()])?));

    for (name, plot) in plots {
        std::fs::write(out.join(format!("{name}.svg")), &plot.svg)?;
        std::fs::write(out.join(format!("{name}.csv")), &plot.csv)?;
        for note in &plot.notes {
            println!("{name}: {note}");
        }
        println!("wrote {}", out.join(format!("{name}.svg")).display());
    }
    Ok(())
}
