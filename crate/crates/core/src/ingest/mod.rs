//! Price and generation-mix ingestion.

mod parse;
mod resample;
mod series;
pub mod time;

pub use parse::{parse_mix, parse_prices, MixFormat, ParseOptions, PriceFormat};
pub use resample::resample;
pub use series::{GenerationMix, PriceSeries};
pub use time::parse_duration;
