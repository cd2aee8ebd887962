//! Timestamp and duration parsing.

use chrono::{DateTime, FixedOffset, NaiveDateTime, SecondsFormat, TimeZone, Utc};

use crate::error::{Error, Result};

const ISO_FORMATS: &[&str] = &[
    "%Y-%m-%dT%H:%M:%S%.f%:z",
    "%Y-%m-%dT%H:%M%:z",
    "%Y-%m-%d %H:%M:%S%.f%:z",
    "%Y-%m-%d %H:%M%:z",
];

/// Parses an RFC 3339 timestamp. Seconds may be omitted and a space may
/// stand in for the `T` separator.
pub fn parse_rfc3339(text: &str) -> Option<DateTime<Utc>> {
    let text = text.trim();
    if let Ok(ts) = DateTime::parse_from_rfc3339(text) {
        return Some(ts.with_timezone(&Utc));
    }
    let normalized = match text.strip_suffix(['Z', 'z']) {
        Some(head) => format!("{head}+00:00"),
        None => text.to_owned(),
    };
    ISO_FORMATS
        .iter()
        .find_map(|fmt| DateTime::parse_from_str(&normalized, fmt).ok())
        .map(|ts| ts.with_timezone(&Utc))
}

/// Parses a local wall-clock time in one of `formats` and shifts it to UTC
/// with a fixed offset.
pub fn parse_local(text: &str, formats: &[&str], offset: FixedOffset) -> Option<DateTime<Utc>> {
    let text = text.trim();
    let naive = formats
        .iter()
        .find_map(|fmt| NaiveDateTime::parse_from_str(text, fmt).ok())?;
    offset
        .from_local_datetime(&naive)
        .single()
        .map(|ts| ts.with_timezone(&Utc))
}

/// Parses a UTC offset label: `+01:00`, `-0330`, `UTC`, `CET`/`MEZ`,
/// `CEST`/`MESZ`, `AEST`.
pub fn parse_offset(text: &str) -> Option<FixedOffset> {
    let text = text.trim();
    let hours = |h: i32| FixedOffset::east_opt(h * 3600);
    match text.to_ascii_uppercase().as_str() {
        "UTC" | "GMT" | "Z" => return hours(0),
        "CET" | "MEZ" => return hours(1),
        "CEST" | "MESZ" => return hours(2),
        "AEST" => return hours(10),
        _ => {}
    }
    let body = text.strip_prefix("UTC").unwrap_or(text);
    let (sign, rest) = match body.as_bytes().first()? {
        b'+' => (1, &body[1..]),
        b'-' => (-1, &body[1..]),
        _ => return None,
    };
    let digits: String = rest.chars().filter(|c| *c != ':').collect();
    if digits.is_empty() || digits.len() > 4 || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let (h, m) = match digits.len() {
        1 | 2 => (digits.parse::<i32>().ok()?, 0),
        _ => {
            let split = digits.len() - 2;
            (digits[..split].parse::<i32>().ok()?, digits[split..].parse::<i32>().ok()?)
        }
    };
    if h > 23 || m > 59 {
        return None;
    }
    FixedOffset::east_opt(sign * (h * 3600 + m * 60))
}

/// Formats a UTC instant as RFC 3339 with a `Z` suffix.
pub fn format_rfc3339(ts: &DateTime<Utc>) -> String {
    ts.to_rfc3339_opts(SecondsFormat::AutoSi, true)
}

/// Parses a sampling interval: `1h`, `1d`, `1w` or a positive integer number
/// of seconds. Case-sensitive.
pub fn parse_duration(text: &str) -> Result<u64> {
    match text {
        "1h" => Ok(3_600),
        "1d" => Ok(86_400),
        "1w" => Ok(604_800),
        _ if !text.is_empty() && text.bytes().all(|b| b.is_ascii_digit()) => match text.parse() {
            Ok(0) | Err(_) => Err(Error::InvalidDuration(text.to_owned())),
            Ok(secs) => Ok(secs),
        },
        _ => Err(Error::InvalidDuration(text.to_owned())),
    }
}
