//! Cost-per-compute model for shutting down HPC systems during expensive
//! electricity periods.
//!
//! A price series is split into a high-price region covering a fraction `x`
//! of the horizon and a low-price region covering the rest. The ratio
//! `k = p_high / p_avg` over all possible splits forms the k–x line of the
//! series. Combined with the cost structure of a system, summarised by
//! `psi = F / (T * P * p_avg)`, shutting down during the high-price region
//! lowers cost per compute exactly when `k > psi + 1`.
//!
//! The crate is organised as:
//!
//! - [`ingest`]: price and generation-mix parsing, canonical JSON, resampling
//! - [`pricemodel`]: segmentation and the variability curve
//! - [`tco`]: policy assessment, break-even and optimum search
//! - [`scenario`]: price amplification, fixed-cost scaling, psi sweeps
//! - [`report`]: SVG plots with CSV sidecars, text/JSON summaries
//! - [`cli`]: the `varcap` command-line front end
//!
//! ```
//! use varcap::ingest::PriceSeries;
//! use varcap::pricemodel::variability_curve;
//! use varcap::tco::{optimize, CostStructure};
//!
//! let start = "2024-01-01T00:00:00Z".parse().unwrap();
//! let series = PriceSeries::new(start, 3600, vec![10.0, 20.0, 30.0, 40.0], "EUR").unwrap();
//! let curve = variability_curve(&series).unwrap();
//! let cost = CostStructure::for_series(&series, 0.0, 1.0).unwrap();
//! let best = optimize(&curve, &cost).unwrap();
//! assert!(best.gain.unwrap() > 0.0);
//! ```

pub mod cli;
pub mod error;
pub mod ingest;
pub mod numeric;
pub mod pricemodel;
pub mod report;
pub mod scenario;
pub mod tco;

pub use error::{Error, Result};
