//! Command-line front end. [`run`] is the whole program; the binary only
//! forwards `argv` and the exit code.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ingest::{
    parse_duration, parse_mix, parse_prices, resample, time::parse_offset, MixFormat, ParseOptions,
    PriceFormat, PriceSeries,
};
use crate::pricemodel::{segment, variability_curve, VariabilityCurve};
use crate::report::{self, Annotation, PlotKind, PlotSpec};
use crate::scenario::{amplify, log_grid, sweep_psi};
use crate::tco::{assess, efficiency_gain, gain_curve, optimize, CostStructure, ResultSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "varcap", version, about = "Cost-per-compute model for price-driven HPC shutdowns")]
pub struct Cli {
    /// TOML file overriding built-in defaults.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert a price file to canonical JSON.
    Ingest(IngestArgs),
    /// Write the k-x line of a series as CSV and SVG.
    Kx(KxArgs),
    /// Evaluate a cost structure against a series.
    Assess(CostArgs),
    /// Find break-even and optimal shutdown fractions.
    Optimize(CostArgs),
    /// Generate hypothetical price series.
    #[command(subcommand)]
    Scenario(ScenarioCommand),
    /// Maximum efficiency gain over a range of psi values.
    SweepPsi(SweepArgs),
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    #[arg(long, value_parser = clap::builder::ValueParser::new(parse_price_format))]
    pub format: PriceFormat,
    #[arg(long)]
    pub input: PathBuf,
    /// 1h, 1d, 1w or integer seconds.
    #[arg(long, value_parser = parse_duration_arg)]
    pub resample: Option<u64>,
    #[arg(long)]
    pub output: PathBuf,
    /// Required sample spacing (1h, 1d, 1w or seconds); inferred otherwise.
    #[arg(long, value_parser = parse_duration_arg)]
    pub interval: Option<u64>,
    #[arg(long)]
    pub currency: Option<String>,
    /// AEMO region filter.
    #[arg(long)]
    pub region: Option<String>,
    /// UTC offset of local timestamps without an offset column, e.g. +01:00.
    #[arg(long, value_parser = parse_offset_arg)]
    pub utc_offset: Option<chrono::FixedOffset>,
}

#[derive(Debug, Args)]
pub struct KxArgs {
    #[arg(long)]
    pub series: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct CostArgs {
    #[arg(long)]
    pub series: PathBuf,
    /// Fixed costs over the horizon covered by the series.
    #[arg(long, value_parser = non_negative)]
    pub fixed_costs: f64,
    /// Power draw under full operation, MW.
    #[arg(long, value_parser = positive)]
    pub power: f64,
    /// Overrides psi derived from fixed costs, horizon, power and mean price.
    #[arg(long, value_parser = non_negative)]
    pub psi: Option<f64>,
    /// Shutdown fraction to evaluate (assess only).
    #[arg(long, value_parser = open_unit)]
    pub x: Option<f64>,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum ScenarioCommand {
    /// Scale positive prices by the fossil share of generation.
    Amplify(AmplifyArgs),
}

#[derive(Debug, Args)]
pub struct AmplifyArgs {
    #[arg(long)]
    pub series: PathBuf,
    #[arg(long)]
    pub mix: PathBuf,
    #[arg(long, default_value = "generic", value_parser = clap::builder::ValueParser::new(parse_mix_format))]
    pub mix_format: MixFormat,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub series: PathBuf,
    #[arg(long, value_parser = positive)]
    pub from: Option<f64>,
    #[arg(long, value_parser = positive)]
    pub to: Option<f64>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub points: Option<u32>,
    #[arg(long)]
    pub output: PathBuf,
}

/// Defaults that a `--config` TOML file may override.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CliConfig {
    pub currency: Option<String>,
    pub aemo_region: String,
    pub smard_utc_offset: String,
    pub aemo_utc_offset: String,
    pub sweep_from: f64,
    pub sweep_to: f64,
    pub sweep_points: u32,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            currency: None,
            aemo_region: "SA1".into(),
            smard_utc_offset: "+01:00".into(),
            aemo_utc_offset: "+10:00".into(),
            sweep_from: 0.1,
            sweep_to: 10.0,
            sweep_points: 50,
        }
    }
}

impl CliConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        let cfg: Self =
            toml::from_str(&text).map_err(|e| CliError::input(format!("{}: {}", path.display(), one_line(&e.to_string()))))?;
        for (name, v) in [("smard_utc_offset", &cfg.smard_utc_offset), ("aemo_utc_offset", &cfg.aemo_utc_offset)] {
            if parse_offset(v).is_none() {
                return Err(CliError::input(format!("config: invalid {name} `{v}`")));
            }
        }
        if !(cfg.sweep_from > 0.0 && cfg.sweep_to >= cfg.sweep_from && cfg.sweep_points > 0) {
            return Err(CliError::input("config: sweep range must satisfy 0 < from <= to and points > 0"));
        }
        Ok(cfg)
    }
}

/// Failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Json(_) | Error::Csv(_) | Error::Io(_) => EXIT_INPUT,
            Error::InvalidPlot(_) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Self { code, message: one_line(&e.to_string()) }
    }
}

fn one_line(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn parse_price_format(s: &str) -> Result<PriceFormat, String> {
    s.parse()
}

fn parse_mix_format(s: &str) -> Result<MixFormat, String> {
    s.parse()
}

fn parse_duration_arg(s: &str) -> Result<u64, String> {
    parse_duration(s).map_err(|e| e.to_string())
}

fn parse_offset_arg(s: &str) -> Result<chrono::FixedOffset, String> {
    parse_offset(s).ok_or_else(|| format!("invalid UTC offset `{s}`"))
}

fn parse_number(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

fn positive(s: &str) -> Result<f64, String> {
    parse_number(s).and_then(|v| if v > 0.0 { Ok(v) } else { Err(format!("{v} must be > 0")) })
}

fn non_negative(s: &str) -> Result<f64, String> {
    parse_number(s).and_then(|v| if v >= 0.0 { Ok(v) } else { Err(format!("{v} must be >= 0")) })
}

fn open_unit(s: &str) -> Result<f64, String> {
    parse_number(s).and_then(|v| if v > 0.0 && v < 1.0 { Ok(v) } else { Err(format!("{v} must be in (0, 1)")) })
}

/// Runs the program. Summaries go to `stdout`, diagnostics to `stderr`.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let rendered = e.to_string();
                    let first = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
                    let _ = writeln!(stderr, "varcap: {}", first.trim_start_matches("error: "));
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "varcap: {}", e.message);
            e.code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let config = match &cli.config {
        Some(path) => CliConfig::load(path)?,
        None => CliConfig::default(),
    };
    match &cli.command {
        Command::Ingest(args) => cmd_ingest(args, &config),
        Command::Kx(args) => cmd_kx(args),
        Command::Assess(args) => cmd_assess(args, out),
        Command::Optimize(args) => cmd_optimize(args, out),
        Command::Scenario(ScenarioCommand::Amplify(args)) => cmd_amplify(args),
        Command::SweepPsi(args) => cmd_sweep(args, &config),
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn with_ext(stem: &Path, ext: &str) -> PathBuf {
    let mut name = stem.as_os_str().to_owned();
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}

/// Loads canonical JSON (`.json`) or a generic `timestamp,price` CSV.
pub fn load_series(path: &Path) -> Result<PriceSeries, CliError> {
    let bytes = read(path)?;
    let context = |e: Error| CliError::input(format!("{}: {}", path.display(), one_line(&e.to_string())));
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        let text = String::from_utf8(bytes).map_err(|_| CliError::input(format!("{}: not UTF-8", path.display())))?;
        PriceSeries::from_canonical_json(&text).map_err(context)
    } else {
        parse_prices(bytes.as_slice(), PriceFormat::Generic, &ParseOptions::default()).map_err(context)
    }
}

fn cmd_ingest(args: &IngestArgs, config: &CliConfig) -> Result<(), CliError> {
    let default_offset = match args.format {
        PriceFormat::Aemo => parse_offset(&config.aemo_utc_offset),
        _ => parse_offset(&config.smard_utc_offset),
    };
    let opts = ParseOptions {
        interval_s: args.interval,
        currency: args.currency.clone().or_else(|| config.currency.clone()),
        utc_offset: args.utc_offset.or(default_offset),
        region: Some(args.region.clone().unwrap_or_else(|| config.aemo_region.clone())),
    };
    let bytes = read(&args.input)?;
    let mut series = parse_prices(bytes.as_slice(), args.format, &opts)
        .map_err(|e| CliError::input(format!("{}: {}", args.input.display(), one_line(&e.to_string()))))?;
    if let Some(target) = args.resample {
        series = resample(&series, target)?;
    }
    write(&args.output, &series.to_canonical_json()?)
}

fn cmd_kx(args: &KxArgs) -> Result<(), CliError> {
    let series = load_series(&args.series)?;
    let curve = variability_curve(&series)?;
    let plot = report::render(
        &PlotSpec::new(PlotKind::KxLine).label(interval_label(series.interval_s())),
        &[report::kx_points(&curve)],
    )?;
    write(&with_ext(&args.output, "csv"), &curve.to_csv())?;
    write(&with_ext(&args.output, "svg"), &plot.svg)
}

fn interval_label(interval_s: u64) -> String {
    match interval_s {
        3600 => "1 h".into(),
        86_400 => "1 d".into(),
        604_800 => "1 w".into(),
        s => format!("{s} s"),
    }
}

fn cost_for(args: &CostArgs, series: &PriceSeries, curve: &VariabilityCurve) -> Result<CostStructure, CliError> {
    // p_avg of the cost structure is the curve's, so both share one value
    let cost = CostStructure::new(args.fixed_costs, series.horizon_hours(), args.power, curve.p_avg())?;
    Ok(match args.psi {
        Some(psi) => cost.with_psi(psi)?,
        None => cost,
    })
}

#[derive(Serialize)]
struct AssessDocument {
    #[serde(flatten)]
    summary: ResultSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    at_x: Option<AtX>,
}

#[derive(Serialize)]
struct AtX {
    x: f64,
    k: f64,
    p_thresh: f64,
    e_ao: f64,
    e_ws: f64,
    cpc_ws: f64,
    viable: bool,
    gain: f64,
}

fn cmd_assess(args: &CostArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let series = load_series(&args.series)?;
    let curve = variability_curve(&series)?;
    let cost = cost_for(args, &series, &curve)?;
    let max_k = curve.points[0].k;
    let mut text = format!(
        "Ψ={:.4}: shutdowns pay off only where k exceeds {:.4}; the series reaches k = {:.4} at its most expensive sample, so shutdowns are {}.",
        cost.psi(),
        crate::tco::viability_bound(&cost),
        max_k,
        if max_k > crate::tco::viability_bound(&cost) { "viable for some shutdown fraction" } else { "never beneficial" }
    );
    let at_x = match args.x {
        Some(x) => {
            let seg = segment(&series, x)?;
            let a = assess(&seg, &cost)?;
            text.push('\n');
            text.push_str(&report::describe_assessment(&a, &cost));
            Some(AtX {
                x: seg.x,
                k: seg.k,
                p_thresh: seg.p_thresh,
                e_ao: a.e_ao,
                e_ws: a.e_ws,
                cpc_ws: a.cpc_ws,
                viable: a.viable,
                gain: efficiency_gain(&seg, &cost)?,
            })
        }
        None => None,
    };
    let doc = AssessDocument { summary: ResultSummary::for_cost(&cost), at_x };
    let json = serde_json::to_string_pretty(&doc).map_err(Error::from)?;
    write(&with_ext(&args.output, "json"), &json)?;
    writeln!(out, "{text}").map_err(|e| CliError { code: EXIT_INTERNAL, message: e.to_string() })
}

fn cmd_optimize(args: &CostArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.x.is_some() {
        return Err(CliError::input("--x applies to assess only"));
    }
    let series = load_series(&args.series)?;
    let curve = variability_curve(&series)?;
    let cost = cost_for(args, &series, &curve)?;
    let result = optimize(&curve, &cost)?;
    let summary = report::summarize(&result, &cost)?;

    let mut spec = PlotSpec::new(PlotKind::EfficiencyVsX).label(format!("Ψ = {}", cost.psi()));
    if let Some(x_be) = result.x_be {
        spec = spec.annotate(Annotation { x: x_be, y: None, label: "break-even".into(), series: Some(0) });
    }
    if let (Some(x), Some(g)) = (result.x_opt, result.gain) {
        spec = spec.annotate(Annotation { x, y: Some(g), label: "optimum".into(), series: Some(0) });
    }
    let plot = report::render(&spec, &[gain_curve(&curve, &cost)?])?;

    write(&with_ext(&args.output, "json"), &summary.json)?;
    write(&with_ext(&args.output, "svg"), &plot.svg)?;
    write(&with_ext(&args.output, "csv"), &plot.csv)?;
    writeln!(out, "{}", summary.text).map_err(|e| CliError { code: EXIT_INTERNAL, message: e.to_string() })
}

fn cmd_amplify(args: &AmplifyArgs) -> Result<(), CliError> {
    let series = load_series(&args.series)?;
    let bytes = read(&args.mix)?;
    let mix = parse_mix(bytes.as_slice(), args.mix_format, &ParseOptions::default())
        .map_err(|e| CliError::input(format!("{}: {}", args.mix.display(), one_line(&e.to_string()))))?;
    let amplified = amplify(&series, &mix)?;
    write(&args.output, &amplified.result.to_canonical_json()?)
}

fn cmd_sweep(args: &SweepArgs, config: &CliConfig) -> Result<(), CliError> {
    let from = args.from.unwrap_or(config.sweep_from);
    let to = args.to.unwrap_or(config.sweep_to);
    let points = args.points.unwrap_or(config.sweep_points);
    let grid = log_grid(from, to, points as usize)?;
    let series = load_series(&args.series)?;
    let curve = variability_curve(&series)?;
    let base = CostStructure::from_psi(grid[0], series.horizon_hours(), 1.0, curve.p_avg())?;
    let sweep = sweep_psi(&curve, &base, &grid)?;
    let plot = report::render(
        &PlotSpec::new(PlotKind::PsiSweep).label(interval_label(series.interval_s())),
        &[sweep.points()],
    )?;
    write(&with_ext(&args.output, "csv"), &sweep.to_csv())?;
    write(&with_ext(&args.output, "svg"), &plot.svg)
}
