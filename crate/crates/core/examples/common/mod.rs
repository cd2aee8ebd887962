#![allow(dead_code)]

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use varcap::ingest::{self, GenerationMix, ParseOptions, PriceFormat, PriceSeries};

/// Prices from `path` if given (canonical `.json` or generic CSV), otherwise
/// a synthetic leap year of hourly prices.
pub fn prices_or_synthetic(path: Option<String>) -> PriceSeries {
    match path {
        Some(p) => load(Path::new(&p)),
        None => synthetic_year(),
    }
}

pub fn load(path: &Path) -> PriceSeries {
    let bytes = std::fs::read(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let parsed = if path.extension().is_some_and(|e| e == "json") {
        PriceSeries::from_canonical_json(&String::from_utf8_lossy(&bytes))
    } else {
        ingest::parse_prices(bytes.as_slice(), PriceFormat::Generic, &ParseOptions::default())
    };
    parsed.unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Daily and weekly cycles, a few multi-hour price spikes and some negative
/// midday hours.
pub fn synthetic_year() -> PriceSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut prices = Vec::with_capacity(8784);
    let mut spike = 0;
    for i in 0..8784 {
        let hour = (i % 24) as f64;
        let mut p = 80.0 + 18.0 * (std::f64::consts::TAU * (hour - 13.0) / 24.0).cos();
        if (i / 24) % 7 >= 5 {
            p -= 15.0;
        }
        if spike == 0 && rng.gen_bool(0.002) {
            spike = rng.gen_range(2..8);
        }
        if spike > 0 {
            spike -= 1;
            p += rng.gen_range(120.0..400.0);
        }
        if (10.0..15.0).contains(&hour) && rng.gen_bool(0.04) {
            p -= 110.0;
        }
        p += rng.gen_range(-12.0..12.0);
        prices.push((p * 100.0).round() / 100.0);
    }
    PriceSeries::new("2024-01-01T00:00:00Z".parse().unwrap(), 3600, prices, "EUR").unwrap()
}

/// Generation mix aligned with `series`; fossil output rises with price.
pub fn synthetic_mix(series: &PriceSeries) -> GenerationMix {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (fossil, renewable) = series
        .prices()
        .iter()
        .map(|&p| {
            let total = rng.gen_range(40_000.0..70_000.0);
            let share = (0.15 + p.max(0.0) / 600.0 + rng.gen_range(-0.05..0.05)).clamp(0.02, 0.95);
            (total * share, total * (1.0 - share))
        })
        .unzip();
    GenerationMix::new(series.start(), series.interval_s(), fossil, renewable).unwrap()
}
