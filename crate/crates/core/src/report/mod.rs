//! Plots and summaries.

mod plot;
mod summary;

pub use plot::{
    chronological_points, kx_points, render, survival_points, Annotation, Plot, PlotKind, PlotSpec,
};
pub use summary::{describe_assessment, summarize, Summary};
