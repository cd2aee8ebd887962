//! Parse the three supported price formats and resample to coarser intervals.
//!
//! ```text
//! cargo run --example ingest_formats
//! ```

use varcap::ingest::{parse_prices, resample, ParseOptions, PriceFormat};

const SMARD: &str = "\
Datum von;Datum bis;Deutschland/Luxemburg [€/MWh] Originalauflösungen
01.01.2024 00:00;01.01.2024 01:00;39,91
01.01.2024 01:00;01.01.2024 02:00;-5,00
01.01.2024 02:00;01.01.2024 03:00;1.002,50
01.01.2024 03:00;01.01.2024 04:00;62,12
";

const AEMO: &str = "\
REGION,SETTLEMENTDATE,TOTALDEMAND,RRP,PERIODTYPE
SA1,2024/01/01 00:05:00,1200.5,80.10,TRADE
VIC1,2024/01/01 00:05:00,4100.0,55.00,TRADE
SA1,2024/01/01 00:10:00,1190.0,-20.50,TRADE
SA1,2024/01/01 00:15:00,1180.0,300.25,TRADE
";

const GENERIC: &str = "\
timestamp,price
2024-01-01T00:00:00Z,50
2024-01-01T06:00:00Z,70
2024-01-01T12:00:00Z,20
2024-01-01T18:00:00Z,110
2024-01-02T00:00:00Z,60
2024-01-02T06:00:00Z,75
2024-01-02T12:00:00Z,10
2024-01-02T18:00:00Z,95
";

fn main() -> varcap::Result<()> {
    let opts = ParseOptions::default();

    let smard = parse_prices(SMARD.as_bytes(), PriceFormat::Smard, &opts)?;
    println!("SMARD: start {}, {:?} {}", smard.start(), smard.prices(), smard.currency());

    // region defaults to SA1; other regions are filtered out
    let aemo = parse_prices(AEMO.as_bytes(), PriceFormat::Aemo, &opts)?;
    println!("AEMO:  {} samples every {} s, {:?} {}", aemo.len(), aemo.interval_s(), aemo.prices(), aemo.currency());

    let generic = parse_prices(GENERIC.as_bytes(), PriceFormat::Generic, &opts)?;
    let daily = resample(&generic, 86_400)?;
    println!("generic: {:?} -> daily means {:?}", generic.prices(), daily.prices());

    println!("\ncanonical form:\n{}", daily.to_canonical_json()?);
    Ok(())
}
