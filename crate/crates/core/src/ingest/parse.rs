//! CSV dialects for price and generation-mix data.

use std::io::Read;
use std::str::FromStr;

use chrono::{DateTime, FixedOffset, Utc};
use csv::{ReaderBuilder, StringRecord, Trim};

use super::series::{regularize, GenerationMix, PriceSeries, Row};
use super::time::{parse_local, parse_offset, parse_rfc3339};
use crate::error::{Error, Result};

/// Source dialect of a price file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PriceFormat {
    /// Semicolon-separated SMARD export with German decimal commas.
    Smard,
    /// AEMO price-and-demand CSV, one region selected.
    Aemo,
    /// `timestamp,price` with RFC 3339 timestamps.
    Generic,
}

/// Source dialect of a generation-mix file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixFormat {
    Smard,
    Generic,
}

impl FromStr for PriceFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "smard" => Ok(Self::Smard),
            "aemo" => Ok(Self::Aemo),
            "generic" => Ok(Self::Generic),
            _ => Err(format!("unknown price format `{s}` (smard, aemo, generic)")),
        }
    }
}

impl FromStr for MixFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "smard" => Ok(Self::Smard),
            "generic" => Ok(Self::Generic),
            _ => Err(format!("unknown mix format `{s}` (smard, generic)")),
        }
    }
}

/// Knobs shared by all dialects. Defaults suit the public exports.
#[derive(Debug, Clone, Default)]
pub struct ParseOptions {
    /// Required spacing in seconds. Inferred from the first gap when absent.
    pub interval_s: Option<u64>,
    /// Currency label. Defaults to EUR for SMARD and generic, AUD for AEMO.
    pub currency: Option<String>,
    /// Offset for local timestamps without an offset column. Defaults to
    /// +01:00 for SMARD and +10:00 (NEM time) for AEMO.
    pub utc_offset: Option<FixedOffset>,
    /// AEMO region filter, default `SA1`.
    pub region: Option<String>,
}

impl ParseOptions {
    fn currency_or(&self, default: &str) -> String {
        self.currency.clone().unwrap_or_else(|| default.to_owned())
    }
}

const SMARD_PRICE_COLUMNS: &[&str] = &["Deutschland/Luxemburg [€/MWh]", "Germany/Luxembourg [€/MWh]"];
const SMARD_TIME_COLUMNS: &[&str] = &["Datum von", "Datum", "Start date", "Start"];
const SMARD_OFFSET_COLUMNS: &[&str] = &["UTC-Offset", "UTC offset", "Zeitzone von", "Zeitzone"];
const SMARD_LOCAL_FORMATS: &[&str] = &[
    "%d.%m.%Y %H:%M",
    "%d.%m.%Y %H:%M:%S",
    "%Y-%m-%d %H:%M",
    "%Y-%m-%d %H:%M:%S",
    "%b %d, %Y %I:%M %p",
];
const AEMO_LOCAL_FORMATS: &[&str] = &["%Y/%m/%d %H:%M:%S", "%Y/%m/%d %H:%M", "%Y-%m-%d %H:%M:%S"];

/// Renewable categories: wind (onshore, offshore), solar and biomass.
const SMARD_RENEWABLE: &[&[&str]] = &[
    &["Biomasse", "Biomass"],
    &["Wind Offshore"],
    &["Wind Onshore"],
    &["Photovoltaik", "Photovoltaics"],
];
/// Fossil categories: coal and gas.
const SMARD_FOSSIL: &[&[&str]] = &[
    &["Braunkohle", "Lignite"],
    &["Steinkohle", "Hard coal"],
    &["Erdgas", "Fossil gas"],
];

pub fn parse_prices(input: impl Read, format: PriceFormat, opts: &ParseOptions) -> Result<PriceSeries> {
    let (rows, currency) = match format {
        PriceFormat::Generic => (generic_price_rows(input)?, opts.currency_or("EUR")),
        PriceFormat::Smard => (smard_price_rows(input, opts)?, opts.currency_or("EUR")),
        PriceFormat::Aemo => (aemo_price_rows(input, opts)?, opts.currency_or("AUD")),
    };
    let (start, interval_s, prices) = regularize(rows, opts.interval_s)?;
    PriceSeries::new(start, interval_s, prices, currency)
}

pub fn parse_mix(input: impl Read, format: MixFormat, opts: &ParseOptions) -> Result<GenerationMix> {
    let rows = match format {
        MixFormat::Generic => generic_mix_rows(input)?,
        MixFormat::Smard => smard_mix_rows(input, opts)?,
    };
    for row in &rows {
        let (fossil, renewable) = row.value;
        for (column, v) in [("fossil", fossil), ("renewable", renewable)] {
            if v < 0.0 {
                return Err(Error::NegativeVolume { line: row.line, column: column.into(), value: v });
            }
        }
        if fossil + renewable <= 0.0 {
            return Err(Error::ZeroGeneration { line: row.line });
        }
    }
    let (start, interval_s, values) = regularize(rows, opts.interval_s)?;
    let (fossil, renewable) = values.into_iter().unzip();
    GenerationMix::new(start, interval_s, fossil, renewable)
}

struct Table {
    headers: StringRecord,
    records: Vec<(u64, StringRecord)>,
}

impl Table {
    fn read(input: impl Read, delimiter: u8) -> Result<Self> {
        let mut reader = ReaderBuilder::new()
            .delimiter(delimiter)
            .flexible(true)
            .trim(Trim::All)
            .from_reader(input);
        let headers = match reader.headers() {
            Ok(h) => h.clone(),
            Err(e) => return Err(csv_error(e)),
        };
        if headers.iter().all(|h| h.is_empty()) {
            return Err(Error::Empty);
        }
        let mut records = Vec::new();
        for result in reader.records() {
            let record = result.map_err(csv_error)?;
            if record.iter().all(|f| f.is_empty()) {
                continue;
            }
            let line = record.position().map_or(0, |p| p.line());
            records.push((line, record));
        }
        if records.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self { headers, records })
    }

    fn column(&self, names: &[&str]) -> Result<usize> {
        self.find(names)
            .ok_or_else(|| Error::MissingColumn(names[0].to_owned()))
    }

    /// Exact header match first, then a case-insensitive prefix match.
    fn find(&self, names: &[&str]) -> Option<usize> {
        names
            .iter()
            .find_map(|n| self.headers.iter().position(|h| h == *n))
            .or_else(|| {
                names.iter().find_map(|n| {
                    let n = n.to_lowercase();
                    self.headers.iter().position(|h| h.to_lowercase().starts_with(&n))
                })
            })
    }

    fn header(&self, col: usize) -> String {
        self.headers.get(col).unwrap_or_default().to_owned()
    }
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    match e.kind() {
        csv::ErrorKind::Io(_) => Error::Csv(e),
        _ => Error::MalformedRow { line, column: String::new(), message: e.to_string() },
    }
}

fn field<'r>(table: &Table, line: u64, record: &'r StringRecord, col: usize) -> Result<&'r str> {
    record.get(col).ok_or_else(|| Error::MalformedRow {
        line,
        column: table.header(col),
        message: format!("row has {} fields, expected at least {}", record.len(), col + 1),
    })
}

fn number(table: &Table, line: u64, text: &str, col: usize, german: bool) -> Result<f64> {
    let cleaned = if german {
        text.replace('.', "").replace(',', ".")
    } else {
        text.to_owned()
    };
    match cleaned.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::NonNumeric { line, column: table.header(col), value: text.to_owned() }),
    }
}

fn bad_timestamp(table: &Table, line: u64, col: usize, text: &str) -> Error {
    Error::MalformedRow {
        line,
        column: table.header(col),
        message: format!("cannot parse timestamp `{text}`"),
    }
}

fn generic_price_rows(input: impl Read) -> Result<Vec<Row<f64>>> {
    let table = Table::read(input, b',')?;
    let ts_col = table.column(&["timestamp"])?;
    let price_col = table.column(&["price"])?;
    table
        .records
        .iter()
        .map(|(line, rec)| {
            let line = *line;
            let ts_text = field(&table, line, rec, ts_col)?;
            let ts = parse_rfc3339(ts_text).ok_or_else(|| bad_timestamp(&table, line, ts_col, ts_text))?;
            let price = number(&table, line, field(&table, line, rec, price_col)?, price_col, false)?;
            Ok(Row { ts, line, value: price })
        })
        .collect()
}

fn generic_mix_rows(input: impl Read) -> Result<Vec<Row<(f64, f64)>>> {
    let table = Table::read(input, b',')?;
    let ts_col = table.column(&["timestamp"])?;
    let fossil_col = table.column(&["fossil_mwh"])?;
    let renewable_col = table.column(&["renewable_mwh"])?;
    table
        .records
        .iter()
        .map(|(line, rec)| {
            let line = *line;
            let ts_text = field(&table, line, rec, ts_col)?;
            let ts = parse_rfc3339(ts_text).ok_or_else(|| bad_timestamp(&table, line, ts_col, ts_text))?;
            let fossil = number(&table, line, field(&table, line, rec, fossil_col)?, fossil_col, false)?;
            let renewable =
                number(&table, line, field(&table, line, rec, renewable_col)?, renewable_col, false)?;
            Ok(Row { ts, line, value: (fossil, renewable) })
        })
        .collect()
}

/// SMARD timestamps are local. An offset column, when present, gives the
/// offset per row. Without one the fixed default offset applies, so a DST
/// switch inside the file shows up as a duplicate or a gap and is rejected.
fn smard_timestamp(
    table: &Table,
    line: u64,
    rec: &StringRecord,
    ts_col: usize,
    offset_col: Option<usize>,
    default_offset: FixedOffset,
) -> Result<DateTime<Utc>> {
    let text = field(table, line, rec, ts_col)?;
    if let Some(ts) = parse_rfc3339(text) {
        return Ok(ts);
    }
    let offset = match offset_col {
        Some(col) => {
            let label = field(table, line, rec, col)?;
            parse_offset(label).ok_or_else(|| Error::MalformedRow {
                line,
                column: table.header(col),
                message: format!("unknown UTC offset `{label}`"),
            })?
        }
        None => default_offset,
    };
    parse_local(text, SMARD_LOCAL_FORMATS, offset).ok_or_else(|| bad_timestamp(table, line, ts_col, text))
}

fn smard_default_offset(opts: &ParseOptions) -> FixedOffset {
    opts.utc_offset
        .unwrap_or_else(|| FixedOffset::east_opt(3600).expect("valid offset"))
}

fn smard_price_rows(input: impl Read, opts: &ParseOptions) -> Result<Vec<Row<f64>>> {
    let table = Table::read(input, b';')?;
    let ts_col = table.column(SMARD_TIME_COLUMNS)?;
    let price_col = table.column(SMARD_PRICE_COLUMNS)?;
    let offset_col = table.find(SMARD_OFFSET_COLUMNS);
    let default_offset = smard_default_offset(opts);
    table
        .records
        .iter()
        .map(|(line, rec)| {
            let line = *line;
            let ts = smard_timestamp(&table, line, rec, ts_col, offset_col, default_offset)?;
            let price = number(&table, line, field(&table, line, rec, price_col)?, price_col, true)?;
            Ok(Row { ts, line, value: price })
        })
        .collect()
}

fn smard_mix_rows(input: impl Read, opts: &ParseOptions) -> Result<Vec<Row<(f64, f64)>>> {
    let table = Table::read(input, b';')?;
    let ts_col = table.column(SMARD_TIME_COLUMNS)?;
    let offset_col = table.find(SMARD_OFFSET_COLUMNS);
    let default_offset = smard_default_offset(opts);
    let columns = |groups: &[&[&str]]| -> Result<Vec<usize>> {
        groups.iter().map(|names| table.column(names)).collect()
    };
    let renewable_cols = columns(SMARD_RENEWABLE)?;
    let fossil_cols = columns(SMARD_FOSSIL)?;
    table
        .records
        .iter()
        .map(|(line, rec)| {
            let line = *line;
            let ts = smard_timestamp(&table, line, rec, ts_col, offset_col, default_offset)?;
            let total = |cols: &[usize]| -> Result<f64> {
                let mut sum = 0.0;
                for &col in cols {
                    let v = number(&table, line, field(&table, line, rec, col)?, col, true)?;
                    if v < 0.0 {
                        return Err(Error::NegativeVolume { line, column: table.header(col), value: v });
                    }
                    sum += v;
                }
                Ok(sum)
            };
            let fossil = total(&fossil_cols)?;
            let renewable = total(&renewable_cols)?;
            Ok(Row { ts, line, value: (fossil, renewable) })
        })
        .collect()
}

fn aemo_price_rows(input: impl Read, opts: &ParseOptions) -> Result<Vec<Row<f64>>> {
    let table = Table::read(input, b',')?;
    let region_col = table.column(&["REGIONID", "REGION"])?;
    let ts_col = table.column(&["SETTLEMENTDATE"])?;
    let price_col = table.column(&["RRP"])?;
    let region = opts.region.as_deref().unwrap_or("SA1");
    let offset = opts
        .utc_offset
        .unwrap_or_else(|| FixedOffset::east_opt(10 * 3600).expect("valid offset"));
    let mut rows = Vec::new();
    for (line, rec) in &table.records {
        let line = *line;
        let row_region = field(&table, line, rec, region_col)?;
        // concatenated monthly files repeat their header line
        if row_region == table.header(region_col) || row_region != region {
            continue;
        }
        let text = field(&table, line, rec, ts_col)?;
        let ts = parse_rfc3339(text)
            .or_else(|| parse_local(text, AEMO_LOCAL_FORMATS, offset))
            .ok_or_else(|| bad_timestamp(&table, line, ts_col, text))?;
        let price = number(&table, line, field(&table, line, rec, price_col)?, price_col, false)?;
        rows.push(Row { ts, line, value: price });
    }
    if rows.is_empty() {
        return Err(Error::Empty);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic(text: &str) -> Result<PriceSeries> {
        parse_prices(text.as_bytes(), PriceFormat::Generic, &ParseOptions::default())
    }

    #[test]
    fn generic_two_rows() {
        let s = generic("timestamp,price\n2024-01-01T00:00Z,50.0\n2024-01-01T01:00Z,60.0\n").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.interval_s(), 3600);
        assert_eq!(s.prices(), &[50.0, 60.0]);
        assert_eq!(s.currency(), "EUR");
    }

    #[test]
    fn generic_reverse_order_is_identical() {
        let a = generic("timestamp,price\n2024-01-01T00:00Z,50.0\n2024-01-01T01:00Z,60.0\n").unwrap();
        let b = generic("timestamp,price\n2024-01-01T01:00Z,60.0\n2024-01-01T00:00Z,50.0\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn generic_declared_hourly_gap() {
        let opts = ParseOptions { interval_s: Some(3600), ..Default::default() };
        let err = parse_prices(
            "timestamp,price\n2024-01-01T00:00Z,1\n2024-01-01T02:00Z,2\n".as_bytes(),
            PriceFormat::Generic,
            &opts,
        )
        .unwrap_err();
        assert!(matches!(err, Error::IrregularSpacing { line: 3, expected_s: 3600, found_s: 7200, .. }));
    }

    #[test]
    fn generic_errors() {
        assert!(matches!(generic(""), Err(Error::Empty)));
        assert!(matches!(generic("timestamp,price\n"), Err(Error::Empty)));
        assert!(matches!(generic("time,price\n2024-01-01T00:00Z,1\n"), Err(Error::MissingColumn(_))));
        let err = generic("timestamp,price\n2024-01-01T00:00Z,1\n2024-01-01T01:00Z,abc\n").unwrap_err();
        match err {
            Error::NonNumeric { line, column, value } => {
                assert_eq!((line, column.as_str(), value.as_str()), (3, "price", "abc"));
            }
            other => panic!("{other:?}"),
        }
        let err = generic("timestamp,price\nnot-a-time,1\n2024-01-01T01:00Z,2\n").unwrap_err();
        assert!(matches!(err, Error::MalformedRow { line: 2, .. }), "{err:?}");
        let err = generic("timestamp,price\n2024-01-01T00:00Z,1\n2024-01-01T00:00Z,2\n").unwrap_err();
        assert!(matches!(err, Error::DuplicateTimestamp { line: 3, .. }), "{err:?}");
        let err = generic("timestamp,price\n2024-01-01T00:00Z\n").unwrap_err();
        assert!(matches!(err, Error::MalformedRow { line: 2, .. }), "{err:?}");
        assert!(matches!(generic("timestamp,price\n2024-01-01T00:00Z,1\n"), Err(Error::TooFewSamples(1))));
        assert!(generic("timestamp,price\n2024-01-01T00:00Z,NaN\n2024-01-01T01:00Z,1\n").is_err());
    }

    #[test]
    fn smard_prices_with_german_decimals() {
        let text = "Datum von;Datum bis;Deutschland/Luxemburg [€/MWh] Originalauflösungen;Belgien [€/MWh] Originalauflösungen\n\
                    01.01.2024 00:00;01.01.2024 01:00;39,91;32,10\n\
                    01.01.2024 01:00;01.01.2024 02:00;-5,00;10,00\n\
                    01.01.2024 02:00;01.01.2024 03:00;1.002,50;10,00\n";
        let s = parse_prices(text.as_bytes(), PriceFormat::Smard, &ParseOptions::default()).unwrap();
        assert_eq!(s.prices(), &[39.91, -5.0, 1002.5]);
        assert_eq!(s.start(), "2023-12-31T23:00:00Z".parse::<DateTime<Utc>>().unwrap());
        assert_eq!(s.currency(), "EUR");
    }

    #[test]
    fn smard_dst_needs_offset_column() {
        // 27.10.2024: 02:00 local occurs twice
        let without = "Datum von;Deutschland/Luxemburg [€/MWh]\n\
                       27.10.2024 01:00;1,0\n27.10.2024 02:00;2,0\n27.10.2024 02:00;3,0\n27.10.2024 03:00;4,0\n";
        let err = parse_prices(without.as_bytes(), PriceFormat::Smard, &ParseOptions::default()).unwrap_err();
        assert!(matches!(err, Error::DuplicateTimestamp { .. }), "{err:?}");

        let with = "Datum von;UTC-Offset;Deutschland/Luxemburg [€/MWh]\n\
                    27.10.2024 01:00;+02:00;1,0\n27.10.2024 02:00;+02:00;2,0\n\
                    27.10.2024 02:00;+01:00;3,0\n27.10.2024 03:00;+01:00;4,0\n";
        let s = parse_prices(with.as_bytes(), PriceFormat::Smard, &ParseOptions::default()).unwrap();
        assert_eq!(s.prices(), &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(s.interval_s(), 3600);
        assert_eq!(s.start(), "2024-10-26T23:00:00Z".parse::<DateTime<Utc>>().unwrap());
    }

    #[test]
    fn smard_missing_value_is_error() {
        let text = "Datum von;Deutschland/Luxemburg [€/MWh]\n01.01.2024 00:00;-\n01.01.2024 01:00;1,0\n";
        let err = parse_prices(text.as_bytes(), PriceFormat::Smard, &ParseOptions::default()).unwrap_err();
        assert!(matches!(err, Error::NonNumeric { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn aemo_region_filter_and_repeated_header() {
        let text = "REGION,SETTLEMENTDATE,TOTALDEMAND,RRP,PERIODTYPE\n\
                    SA1,2024/01/01 00:05:00,1200.5,80.1,TRADE\n\
                    VIC1,2024/01/01 00:05:00,5000,70.0,TRADE\n\
                    REGION,SETTLEMENTDATE,TOTALDEMAND,RRP,PERIODTYPE\n\
                    SA1,2024/01/01 00:10:00,1190.0,-20.5,TRADE\n";
        let s = parse_prices(text.as_bytes(), PriceFormat::Aemo, &ParseOptions::default()).unwrap();
        assert_eq!(s.prices(), &[80.1, -20.5]);
        assert_eq!(s.interval_s(), 300);
        assert_eq!(s.currency(), "AUD");
        assert_eq!(s.start(), "2023-12-31T14:05:00Z".parse::<DateTime<Utc>>().unwrap());

        let vic = ParseOptions { region: Some("VIC1".into()), ..Default::default() };
        assert!(matches!(
            parse_prices(text.as_bytes(), PriceFormat::Aemo, &vic),
            Err(Error::TooFewSamples(1))
        ));
        let none = ParseOptions { region: Some("QLD1".into()), ..Default::default() };
        assert!(matches!(parse_prices(text.as_bytes(), PriceFormat::Aemo, &none), Err(Error::Empty)));
    }

    #[test]
    fn generic_mix() {
        let text = "timestamp,fossil_mwh,renewable_mwh\n2024-01-01T00:00Z,10,30\n2024-01-01T01:00Z,5,5\n";
        let mix = parse_mix(text.as_bytes(), MixFormat::Generic, &ParseOptions::default()).unwrap();
        assert_eq!(mix.fossil(), &[10.0, 5.0]);
        assert_eq!(mix.renewable(), &[30.0, 5.0]);
    }

    #[test]
    fn generic_mix_errors() {
        let zero = "timestamp,fossil_mwh,renewable_mwh\n2024-01-01T00:00Z,0,0\n2024-01-01T01:00Z,5,5\n";
        assert!(matches!(
            parse_mix(zero.as_bytes(), MixFormat::Generic, &ParseOptions::default()),
            Err(Error::ZeroGeneration { line: 2 })
        ));
        let neg = "timestamp,fossil_mwh,renewable_mwh\n2024-01-01T00:00Z,1,1\n2024-01-01T01:00Z,-5,5\n";
        assert!(matches!(
            parse_mix(neg.as_bytes(), MixFormat::Generic, &ParseOptions::default()),
            Err(Error::NegativeVolume { line: 3, .. })
        ));
    }

    #[test]
    fn smard_mix_sums_categories() {
        // wind on 5 + wind off 5 + solar 10 + biomass 10 = 30 renewable;
        // lignite 5 + hard coal 3 + gas 2 = 10 fossil; hydro and nuclear ignored
        let text = "Datum von;Datum bis;Biomasse [MWh] Originalauflösungen;Wasserkraft [MWh] Originalauflösungen;\
                    Wind Offshore [MWh] Originalauflösungen;Wind Onshore [MWh] Originalauflösungen;\
                    Photovoltaik [MWh] Originalauflösungen;Kernenergie [MWh] Originalauflösungen;\
                    Braunkohle [MWh] Originalauflösungen;Steinkohle [MWh] Originalauflösungen;\
                    Erdgas [MWh] Originalauflösungen\n\
                    01.01.2024 00:00;01.01.2024 01:00;10;7;5;5;10;0;5;3;2\n\
                    01.01.2024 01:00;01.01.2024 02:00;1.000,5;7;0;0;0;0;0;0;0\n";
        let mix = parse_mix(text.as_bytes(), MixFormat::Smard, &ParseOptions::default()).unwrap();
        assert_eq!(mix.fossil(), &[10.0, 0.0]);
        assert_eq!(mix.renewable(), &[30.0, 1000.5]);
    }

    #[test]
    fn format_names() {
        assert_eq!("smard".parse::<PriceFormat>().unwrap(), PriceFormat::Smard);
        assert!("SMARD".parse::<PriceFormat>().is_err());
        assert!("aemo".parse::<MixFormat>().is_err());
    }
}
