//! Deterministic SVG line plots with a CSV data sidecar.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ingest::PriceSeries;
use crate::pricemodel::VariabilityCurve;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 70.0;
const MARGIN_LEFT: f64 = 80.0;
const FONT: &str = "DejaVu Sans, Arial, sans-serif";
const PALETTE: &[&str] = &["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];
const BAND_COLOR: &str = "#9ecae1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    KxLine,
    EfficiencyVsX,
    PsiSweep,
    PriceSurvival,
    PriceChronological,
}

impl PlotKind {
    fn axis_names(self) -> (&'static str, &'static str) {
        match self {
            Self::KxLine => ("x", "k"),
            Self::EfficiencyVsX => ("x", "gain"),
            Self::PsiSweep => ("psi", "gain"),
            Self::PriceSurvival => ("x", "price"),
            Self::PriceChronological => ("hours", "price"),
        }
    }

    fn axis_titles(self) -> (&'static str, &'static str) {
        match self {
            Self::KxLine => ("shutdown fraction x", "k = p_high / p_avg"),
            Self::EfficiencyVsX => ("shutdown fraction x", "efficiency gain over always-on"),
            Self::PsiSweep => ("cost-distribution coefficient psi", "maximum efficiency gain"),
            Self::PriceSurvival => ("fraction of time at or above price", "price per MWh"),
            Self::PriceChronological => ("hours since start", "price per MWh"),
        }
    }

    fn default_title(self) -> &'static str {
        match self {
            Self::KxLine => "Price variability (k-x line)",
            Self::EfficiencyVsX => "Efficiency gain of shutdowns",
            Self::PsiSweep => "Maximum efficiency gain by psi",
            Self::PriceSurvival => "Prices in descending order",
            Self::PriceChronological => "Prices over time",
        }
    }
}

/// A marker at `x`. With `y` it is drawn as a dot, otherwise as a vertical
/// line across the plot.
#[derive(Debug, Clone, PartialEq)]
pub struct Annotation {
    pub x: f64,
    pub y: Option<f64>,
    pub label: String,
    /// Index of the series whose colour the marker takes.
    pub series: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub kind: PlotKind,
    pub title: String,
    pub series_labels: Vec<String>,
    pub log_x: bool,
    pub log_y: bool,
    pub annotations: Vec<Annotation>,
    /// Shades `k` above this bound; k–x plots only.
    pub viability_bound: Option<f64>,
}

impl PlotSpec {
    pub fn new(kind: PlotKind) -> Self {
        let (log_x, log_y) = match kind {
            PlotKind::KxLine => (true, true),
            PlotKind::EfficiencyVsX | PlotKind::PsiSweep | PlotKind::PriceSurvival => (true, false),
            PlotKind::PriceChronological => (false, false),
        };
        Self {
            kind,
            title: kind.default_title().to_owned(),
            series_labels: Vec::new(),
            log_x,
            log_y,
            annotations: Vec::new(),
            viability_bound: None,
        }
    }

    pub fn label(mut self, label: impl Into<String>) -> Self {
        self.series_labels.push(label.into());
        self
    }

    pub fn title(mut self, title: impl Into<String>) -> Self {
        self.title = title.into();
        self
    }

    pub fn annotate(mut self, annotation: Annotation) -> Self {
        self.annotations.push(annotation);
        self
    }

    pub fn viability_band(mut self, bound: f64) -> Self {
        self.viability_bound = Some(bound);
        self
    }

    fn series_label(&self, i: usize) -> String {
        self.series_labels
            .get(i)
            .cloned()
            .unwrap_or_else(|| format!("series {}", i + 1))
    }
}

/// A rendered plot: SVG document, CSV of the plotted points and any caption
/// notes (also embedded in the SVG).
#[derive(Debug, Clone, PartialEq)]
pub struct Plot {
    pub svg: String,
    pub csv: String,
    pub notes: Vec<String>,
}

/// `(x, k)` for every curve point.
pub fn kx_points(curve: &VariabilityCurve) -> Vec<(f64, f64)> {
    curve.points.iter().map(|p| (p.x, p.k)).collect()
}

/// Prices in descending order against the fraction of time `i / n` spent at
/// or above each price.
pub fn survival_points(series: &PriceSeries) -> Vec<(f64, f64)> {
    let mut prices = series.prices().to_vec();
    prices.sort_by(|a, b| b.total_cmp(a));
    let n = prices.len() as f64;
    prices
        .into_iter()
        .enumerate()
        .map(|(i, p)| ((i + 1) as f64 / n, p))
        .collect()
}

/// Prices against hours since the first sample.
pub fn chronological_points(series: &PriceSeries) -> Vec<(f64, f64)> {
    let step = series.interval_s() as f64 / 3600.0;
    series
        .prices()
        .iter()
        .enumerate()
        .map(|(i, &p)| (i as f64 * step, p))
        .collect()
}

pub fn render(spec: &PlotSpec, data: &[Vec<(f64, f64)>]) -> Result<Plot> {
    if data.is_empty() || data.iter().all(|s| s.is_empty()) {
        return Err(Error::EmptyPlot);
    }
    let mut notes = Vec::new();
    let mut series = Vec::with_capacity(data.len());
    for (i, points) in data.iter().enumerate() {
        let label = spec.series_label(i);
        if let Some(&(x, y)) = points.iter().find(|(x, y)| !x.is_finite() || !y.is_finite()) {
            return Err(Error::InvalidPlot(format!("series `{label}` has non-finite point ({x}, {y})")));
        }
        let mut kept = Vec::with_capacity(points.len());
        let mut clipped = 0usize;
        for &(x, y) in points {
            if spec.log_x && x <= 0.0 {
                return Err(Error::NonPositiveOnLogAxis { label, axis: "x", value: x });
            }
            if spec.log_y && y <= 0.0 {
                if spec.kind == PlotKind::PriceSurvival {
                    clipped += 1;
                    continue;
                }
                return Err(Error::NonPositiveOnLogAxis { label, axis: "y", value: y });
            }
            kept.push((x, y));
        }
        if clipped > 0 {
            notes.push(format!(
                "{clipped} non-positive price(s) of `{label}` omitted from the logarithmic axis"
            ));
        }
        series.push((label, kept));
    }
    if series.iter().all(|(_, s)| s.is_empty()) {
        return Err(Error::EmptyPlot);
    }
    for a in &spec.annotations {
        if spec.log_x && a.x <= 0.0 {
            return Err(Error::NonPositiveOnLogAxis { label: a.label.clone(), axis: "x", value: a.x });
        }
        if let Some(y) = a.y.filter(|y| spec.log_y && *y <= 0.0) {
            return Err(Error::NonPositiveOnLogAxis { label: a.label.clone(), axis: "y", value: y });
        }
    }

    let csv = sidecar(spec.kind, &series)?;
    let svg = draw(spec, &series, &notes);
    Ok(Plot { svg, csv, notes })
}

fn sidecar(kind: PlotKind, series: &[(String, Vec<(f64, f64)>)]) -> Result<String> {
    let (xn, yn) = kind.axis_names();
    let mut w = csv::Writer::from_writer(Vec::new());
    let multi = series.len() > 1;
    if multi {
        w.write_record(["series", xn, yn])?;
    } else {
        w.write_record([xn, yn])?;
    }
    for (label, points) in series {
        for (x, y) in points {
            if multi {
                w.write_record([label.as_str(), &x.to_string(), &y.to_string()])?;
            } else {
                w.write_record([x.to_string(), y.to_string()])?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Maps data values to pixel positions along one axis.
#[derive(Debug, Clone, Copy)]
struct Axis {
    log: bool,
    lo: f64,
    hi: f64,
    px_lo: f64,
    px_hi: f64,
}

impl Axis {
    fn fit(values: impl Iterator<Item = f64>, log: bool, px_lo: f64, px_hi: f64) -> Self {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in values {
            let t = if log { v.log10() } else { v };
            lo = lo.min(t);
            hi = hi.max(t);
        }
        if !lo.is_finite() || !hi.is_finite() {
            (lo, hi) = (0.0, 1.0);
        }
        if hi - lo < 1e-12 {
            let pad = if log { 0.5 } else { lo.abs().max(1.0) * 0.5 };
            (lo, hi) = (lo - pad, hi + pad);
        } else {
            let pad = (hi - lo) * 0.04;
            (lo, hi) = (lo - pad, hi + pad);
        }
        Self { log, lo, hi, px_lo, px_hi }
    }

    fn px(&self, v: f64) -> f64 {
        let t = if self.log { v.log10() } else { v };
        self.px_lo + (t - self.lo) / (self.hi - self.lo) * (self.px_hi - self.px_lo)
    }

    fn contains(&self, v: f64) -> bool {
        let t = if self.log { v.log10() } else { v };
        t >= self.lo && t <= self.hi
    }

    fn ticks(&self) -> Vec<f64> {
        if self.log {
            let (a, b) = (self.lo.ceil() as i32, self.hi.floor() as i32);
            if b >= a {
                let stride = ((b - a) / 8 + 1) as usize;
                return (a..=b).step_by(stride).map(|e| 10f64.powi(e)).collect();
            }
            // less than a decade: fall back to linear ticks in data space
            let lin = Axis {
                log: false,
                lo: 10f64.powf(self.lo),
                hi: 10f64.powf(self.hi),
                ..*self
            };
            return lin.ticks();
        }
        let span = self.hi - self.lo;
        let raw = span / 6.0;
        let mag = 10f64.powf(raw.log10().floor());
        let step = [1.0, 2.0, 5.0, 10.0]
            .iter()
            .map(|m| m * mag)
            .find(|s| span / s <= 8.0)
            .unwrap_or(10.0 * mag);
        let first = (self.lo / step).ceil() as i64;
        let last = (self.hi / step).floor() as i64;
        (first..=last).map(|i| i as f64 * step).collect()
    }
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let a = v.abs();
    if !(1e-4..1e6).contains(&a) {
        return format!("{v:e}");
    }
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_owned()
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

fn color(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

fn draw(spec: &PlotSpec, series: &[(String, Vec<(f64, f64)>)], notes: &[String]) -> String {
    let left = MARGIN_LEFT;
    let right = WIDTH - MARGIN_RIGHT;
    let top = MARGIN_TOP;
    let bottom = HEIGHT - MARGIN_BOTTOM;

    let xs = series
        .iter()
        .flat_map(|(_, p)| p.iter().map(|q| q.0))
        .chain(spec.annotations.iter().map(|a| a.x));
    let x_axis = Axis::fit(xs, spec.log_x, left, right);
    let ys = series
        .iter()
        .flat_map(|(_, p)| p.iter().map(|q| q.1))
        .chain(spec.annotations.iter().filter_map(|a| a.y))
        .chain(spec.viability_bound.filter(|b| !spec.log_y || *b > 0.0));
    let y_axis = Axis::fit(ys, spec.log_y, bottom, top);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="{FONT}">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="28" text-anchor="middle" font-size="16" font-weight="bold">{}</text>"#,
        WIDTH / 2.0,
        escape(&spec.title)
    );
    let _ = writeln!(
        s,
        r#"<clipPath id="plot-area"><rect x="{left:.2}" y="{top:.2}" width="{:.2}" height="{:.2}"/></clipPath>"#,
        right - left,
        bottom - top
    );

    if let Some(bound) = spec.viability_bound.filter(|b| !spec.log_y || *b > 0.0) {
        let y = y_axis.px(bound).clamp(top, bottom);
        let _ = writeln!(
            s,
            r#"<rect class="viable-band" x="{left:.2}" y="{top:.2}" width="{:.2}" height="{:.2}" fill="{BAND_COLOR}" fill-opacity="0.35"/>"#,
            right - left,
            y - top
        );
        let _ = writeln!(
            s,
            r#"<line class="viability-bound" x1="{left:.2}" y1="{y:.2}" x2="{right:.2}" y2="{y:.2}" stroke="{BAND_COLOR}" stroke-width="1.5"/>"#
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="end">k = {}</text>"#,
            right - 4.0,
            y - 4.0,
            tick_label(bound)
        );
    }

    s.push_str("<g class=\"grid\" stroke=\"#e0e0e0\" stroke-width=\"1\">\n");
    let x_ticks: Vec<f64> = x_axis.ticks().into_iter().filter(|t| x_axis.contains(*t)).collect();
    let y_ticks: Vec<f64> = y_axis.ticks().into_iter().filter(|t| y_axis.contains(*t)).collect();
    for &t in &x_ticks {
        let x = x_axis.px(t);
        let _ = writeln!(s, r#"<line x1="{x:.2}" y1="{top:.2}" x2="{x:.2}" y2="{bottom:.2}"/>"#);
    }
    for &t in &y_ticks {
        let y = y_axis.px(t);
        let _ = writeln!(s, r#"<line x1="{left:.2}" y1="{y:.2}" x2="{right:.2}" y2="{y:.2}"/>"#);
    }
    s.push_str("</g>\n");

    s.push_str("<g class=\"axes\" stroke=\"#333333\" stroke-width=\"1\">\n");
    let _ = writeln!(s, r#"<line x1="{left:.2}" y1="{bottom:.2}" x2="{right:.2}" y2="{bottom:.2}"/>"#);
    let _ = writeln!(s, r#"<line x1="{left:.2}" y1="{top:.2}" x2="{left:.2}" y2="{bottom:.2}"/>"#);
    s.push_str("</g>\n");
    s.push_str("<g class=\"tick-labels\" font-size=\"11\" fill=\"#333333\">\n");
    for &t in &x_ticks {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            x_axis.px(t),
            bottom + 16.0,
            tick_label(t)
        );
    }
    for &t in &y_ticks {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            left - 6.0,
            y_axis.px(t) + 4.0,
            tick_label(t)
        );
    }
    s.push_str("</g>\n");

    let (x_title, y_title) = spec.kind.axis_titles();
    let log_suffix = |log: bool| if log { " (log)" } else { "" };
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="13">{}{}</text>"#,
        (left + right) / 2.0,
        bottom + 40.0,
        escape(x_title),
        log_suffix(spec.log_x)
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{:.2}" text-anchor="middle" font-size="13" transform="rotate(-90 20 {:.2})">{}{}</text>"#,
        (top + bottom) / 2.0,
        (top + bottom) / 2.0,
        escape(y_title),
        log_suffix(spec.log_y)
    );

    for (i, (label, points)) in series.iter().enumerate() {
        let mut coords = String::new();
        for (j, &(x, y)) in points.iter().enumerate() {
            if j > 0 {
                coords.push(' ');
            }
            let _ = write!(coords, "{:.2},{:.2}", x_axis.px(x), y_axis.px(y));
        }
        let _ = writeln!(
            s,
            r#"<polyline class="series" data-label="{}" fill="none" stroke="{}" stroke-width="1.5" clip-path="url(#plot-area)" points="{}"/>"#,
            escape(label),
            color(i),
            coords
        );
    }

    for a in &spec.annotations {
        let c = a.series.map_or("#000000", color);
        let x = x_axis.px(a.x);
        match a.y {
            Some(yv) => {
                let y = y_axis.px(yv);
                let _ = writeln!(
                    s,
                    r##"<circle class="marker" cx="{x:.2}" cy="{y:.2}" r="4" fill="{c}" stroke="#000000" stroke-width="0.8"/>"##
                );
                let _ = writeln!(
                    s,
                    r#"<text class="marker-label" x="{:.2}" y="{:.2}" font-size="11">{}</text>"#,
                    x + 6.0,
                    y - 6.0,
                    escape(&a.label)
                );
            }
            None => {
                let _ = writeln!(
                    s,
                    r#"<line class="marker-line" x1="{x:.2}" y1="{top:.2}" x2="{x:.2}" y2="{bottom:.2}" stroke="{c}" stroke-dasharray="5,4"/>"#
                );
                let _ = writeln!(
                    s,
                    r#"<text class="marker-label" x="{:.2}" y="{:.2}" font-size="11">{}</text>"#,
                    x + 4.0,
                    top + 12.0,
                    escape(&a.label)
                );
            }
        }
    }

    let legend_x = right - 180.0;
    for (i, (label, _)) in series.iter().enumerate() {
        let y = top + 10.0 + 16.0 * i as f64;
        let _ = writeln!(
            s,
            r#"<rect class="legend" x="{legend_x:.2}" y="{:.2}" width="12" height="3" fill="{}"/>"#,
            y - 2.0,
            color(i)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="11">{}</text>"#,
            legend_x + 18.0,
            y + 3.0,
            escape(label)
        );
    }

    for (i, note) in notes.iter().enumerate() {
        let _ = writeln!(
            s,
            r##"<text class="note" x="{left:.2}" y="{:.2}" font-size="10" fill="#555555">{}</text>"##,
            HEIGHT - 8.0 - 12.0 * (notes.len() - 1 - i) as f64,
            escape(note)
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pricemodel::variability_curve;
    use chrono::{DateTime, Utc};

    fn hourly(prices: Vec<f64>) -> PriceSeries {
        let start: DateTime<Utc> = "2024-01-01T00:00:00Z".parse().unwrap();
        PriceSeries::new(start, 3600, prices, "EUR").unwrap()
    }

    fn polylines(svg: &str) -> Vec<usize> {
        svg.lines()
            .filter(|l| l.starts_with("<polyline"))
            .map(|l| {
                let pts = l.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
                pts.split(' ').count()
            })
            .collect()
    }

    #[test]
    fn defaults() {
        let kx = PlotSpec::new(PlotKind::KxLine);
        assert!(kx.log_x && kx.log_y);
        let eff = PlotSpec::new(PlotKind::EfficiencyVsX);
        assert!(eff.log_x);
    }

    #[test]
    fn one_curve_one_polyline() {
        let curve = variability_curve(&hourly(vec![10.0, 20.0, 30.0, 40.0])).unwrap();
        let plot = render(&PlotSpec::new(PlotKind::KxLine).label("toy"), &[kx_points(&curve)]).unwrap();
        assert_eq!(polylines(&plot.svg), vec![3]);
        assert_eq!(plot.csv.lines().next(), Some("x,k"));
        assert_eq!(plot.csv.lines().count(), 4);
    }

    #[test]
    fn viability_band_sits_at_bound() {
        let curve = variability_curve(&hourly(vec![10.0, 20.0, 30.0, 400.0])).unwrap();
        let plot = render(
            &PlotSpec::new(PlotKind::KxLine).viability_band(3.0),
            &[kx_points(&curve)],
        )
        .unwrap();
        let band = plot.svg.lines().find(|l| l.contains("class=\"viable-band\"")).unwrap();
        let bound = plot.svg.lines().find(|l| l.contains("class=\"viability-bound\"")).unwrap();
        // band spans from the plot top down to the k = 3 line
        let attr = |line: &str, name: &str| -> f64 {
            line.split(&format!(" {name}=\"")).nth(1).unwrap().split('"').next().unwrap().parse().unwrap()
        };
        let y_bound = attr(bound, "y1");
        assert!((attr(band, "y") + attr(band, "height") - y_bound).abs() < 0.02);
        assert!(plot.svg.contains(">k = 3<"));
    }

    #[test]
    fn markers_per_annotation() {
        let data = vec![vec![(0.01, 0.1), (0.1, 0.2)], vec![(0.01, 0.3), (0.1, 0.1)], vec![(0.01, -0.1), (0.1, 0.0)]];
        let mut spec = PlotSpec::new(PlotKind::EfficiencyVsX).label("a").label("b").label("c");
        for i in 0..3 {
            spec = spec.annotate(Annotation { x: 0.05, y: Some(0.1), label: format!("opt {i}"), series: Some(i) });
        }
        let plot = render(&spec, &data).unwrap();
        assert_eq!(polylines(&plot.svg).len(), 3);
        assert_eq!(plot.svg.matches("class=\"marker\"").count(), 3);
        assert_eq!(plot.csv.lines().next(), Some("series,x,gain"));
    }

    #[test]
    fn errors() {
        let spec = PlotSpec::new(PlotKind::KxLine);
        assert!(matches!(render(&spec, &[]), Err(Error::EmptyPlot)));
        assert!(matches!(render(&spec, &[vec![]]), Err(Error::EmptyPlot)));
        match render(&spec.clone().label("bad"), &[vec![(0.5, -1.0)]]) {
            Err(Error::NonPositiveOnLogAxis { label, axis, .. }) => assert_eq!((label.as_str(), axis), ("bad", "y")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(render(&spec, &[vec![(0.0, 1.0)]]), Err(Error::NonPositiveOnLogAxis { axis: "x", .. })));
        assert!(matches!(render(&spec, &[vec![(f64::NAN, 1.0)]]), Err(Error::InvalidPlot(_))));
    }

    #[test]
    fn survival_clips_negative_prices_on_log_y() {
        let series = hourly(vec![100.0, -5.0, 50.0, 0.0, 20.0]);
        let mut spec = PlotSpec::new(PlotKind::PriceSurvival).label("de");
        spec.log_y = true;
        let plot = render(&spec, &[survival_points(&series)]).unwrap();
        assert_eq!(polylines(&plot.svg), vec![3]);
        assert_eq!(plot.notes.len(), 1);
        assert!(plot.notes[0].starts_with("2 non-positive"));
        assert!(plot.svg.contains("class=\"note\""));
        // linear y keeps everything
        let plot = render(&PlotSpec::new(PlotKind::PriceSurvival), &[survival_points(&series)]).unwrap();
        assert_eq!(polylines(&plot.svg), vec![5]);
        assert!(plot.notes.is_empty());
    }

    #[test]
    fn survival_and_chronological_points() {
        let series = hourly(vec![10.0, 30.0, 20.0, 40.0]);
        assert_eq!(survival_points(&series), vec![(0.25, 40.0), (0.5, 30.0), (0.75, 20.0), (1.0, 10.0)]);
        assert_eq!(chronological_points(&series)[3], (3.0, 40.0));
        let plot = render(&PlotSpec::new(PlotKind::PriceChronological), &[chronological_points(&series)]).unwrap();
        assert_eq!(plot.csv.lines().next(), Some("hours,price"));
    }

    #[test]
    fn labels_are_escaped() {
        let plot = render(&PlotSpec::new(PlotKind::PsiSweep).label("a<b & \"c\""), &[vec![(0.1, 0.0), (1.0, 0.0)]]).unwrap();
        assert!(plot.svg.contains("a&lt;b &amp; &quot;c&quot;"));
        assert!(plot.svg.contains("<polyline"));
    }

    #[test]
    fn ticks() {
        assert_eq!(tick_label(0.001), "0.001");
        assert_eq!(tick_label(100.0), "100");
        assert_eq!(tick_label(2.5), "2.5");
        let axis = Axis::fit([0.001, 1.0].into_iter(), true, 0.0, 100.0);
        assert_eq!(axis.ticks(), vec![0.001, 0.01, 0.1, 1.0]);
    }
}
