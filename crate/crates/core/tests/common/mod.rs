#![allow(dead_code)]

use chrono::{DateTime, Duration, Utc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use varcap::ingest::PriceSeries;

pub fn t0() -> DateTime<Utc> {
    "2024-01-01T00:00:00Z".parse().unwrap()
}

pub fn hourly(prices: Vec<f64>) -> PriceSeries {
    PriceSeries::new(t0(), 3600, prices, "EUR").unwrap()
}

/// Random price series with `n` in `[n_min, n_max]` and prices in
/// `[-50, 500]`. Shapes alternate between uniform, spiky, and integer-valued
/// (many ties) so the corpus covers plateaus and heavy tails.
pub fn random_series(rng: &mut ChaCha8Rng, n_min: usize, n_max: usize) -> PriceSeries {
    loop {
        let n = rng.gen_range(n_min..=n_max);
        let shape = rng.gen_range(0..3);
        let prices: Vec<f64> = (0..n)
            .map(|_| match shape {
                0 => rng.gen_range(-50.0..=500.0),
                1 => {
                    if rng.gen_bool(0.03) {
                        rng.gen_range(200.0..=500.0)
                    } else {
                        rng.gen_range(-50.0..=120.0)
                    }
                }
                _ => rng.gen_range(-50i32..=500) as f64,
            })
            .collect();
        let mean = prices.iter().sum::<f64>() / n as f64;
        if mean > 0.0 {
            return hourly(prices);
        }
    }
}

pub fn corpus(seed: u64, count: usize, n_min: usize, n_max: usize) -> Vec<PriceSeries> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_series(&mut rng, n_min, n_max)).collect()
}

/// A year of hourly prices with daily and weekly cycles, occasional
/// multi-hour spikes and a few negative hours.
pub fn synthetic_year(seed: u64) -> PriceSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 24 * 366;
    let mut prices = Vec::with_capacity(n);
    let mut spike = 0usize;
    for i in 0..n {
        let hour = (i % 24) as f64;
        let day = (i / 24) % 7;
        let daily = 18.0 * (std::f64::consts::TAU * (hour - 13.0) / 24.0).cos();
        let weekend = if day >= 5 { -15.0 } else { 0.0 };
        if spike == 0 && rng.gen_bool(0.002) {
            spike = rng.gen_range(2..8);
        }
        let surge = if spike > 0 {
            spike -= 1;
            rng.gen_range(120.0..400.0)
        } else {
            0.0
        };
        let noise = rng.gen_range(-12.0..12.0);
        let solar_dip = if (10.0..15.0).contains(&hour) && rng.gen_bool(0.04) { -110.0 } else { 0.0 };
        prices.push(((80.0 + daily + weekend + surge + noise + solar_dip) * 100.0).round() / 100.0);
    }
    hourly(prices)
}

/// Generic mix CSV aligned with `series`.
pub fn synthetic_mix_csv(series: &PriceSeries, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::from("timestamp,fossil_mwh,renewable_mwh\n");
    for (i, (ts, _)) in series.samples().enumerate() {
        let hour = (i % 24) as f64;
        let solar = (std::f64::consts::PI * (hour - 6.0) / 12.0).sin().max(0.0) * 15_000.0;
        let wind = rng.gen_range(2_000.0..30_000.0);
        let fossil = rng.gen_range(5_000.0..25_000.0);
        out.push_str(&format!(
            "{},{fossil:.1},{:.1}\n",
            ts.to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            solar + wind
        ));
    }
    out
}

pub fn after(hours: i64) -> DateTime<Utc> {
    t0() + Duration::hours(hours)
}
