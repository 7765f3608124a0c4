//! Command-line front end for the `stacksim` library.
//!
//! `compare` scores one pair of charts, `batch` scores a manifest of pairs
//! and pools the scores, `render` draws a scored pair as SVG. Results go to
//! standard output (or `-o`), diagnostics to standard error.
//!
//! Exit codes: 0 success, 1 validation or domain error (bad flag values,
//! unknown chart names, incompatible charts, unwritable output), 2 parse
//! error (malformed CSV or JSON, command-line usage).

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stacksim::{
    align_pair, auto_scale, compare_pair, parse_csv, parse_json, parse_pairs_manifest, render_pair,
    serialize_comparison, serialize_results, ChartPair, ChartTable, ComparisonResult, Error,
    MetricSpec, OutputFormat, PairCollection, RenderSpec, ScaleSpec, StackedBarChart, VarianceKind,
};

#[derive(Parser)]
#[command(
    name = "stacksim",
    version,
    about = "Similarity scoring for stacked bar charts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score one pair of charts and print the report triple
    Compare(CompareArgs),
    /// Score every pair in a manifest and pool the results
    Batch(BatchArgs),
    /// Draw a scored pair side by side as a captioned SVG
    Render(RenderArgs),
}

/// Flags shared by every subcommand. Values arrive as strings and are
/// validated before any file is read, so a bad flag exits 1 even when the
/// input paths do not exist.
#[derive(Args)]
struct CommonArgs {
    /// Minkowski order, any finite number >= 1
    #[arg(
        short = 'r',
        long = "metric-order",
        default_value = "2",
        value_name = "R",
        allow_hyphen_values = true
    )]
    metric_order: String,

    /// Scale constant: a positive number, or "auto" to derive one
    #[arg(
        short = 'c',
        long = "scale",
        default_value = "auto",
        value_name = "C",
        allow_hyphen_values = true
    )]
    scale: String,

    /// Match segments by label instead of by position
    #[arg(long)]
    align_by_label: bool,

    /// Decimal places for s and the pooled statistics in text output
    #[arg(
        long,
        default_value = "2",
        value_name = "N",
        allow_hyphen_values = true
    )]
    precision: String,
}

#[derive(Args)]
struct CompareArgs {
    /// Chart table file, CSV or JSON; with two files, --left is looked up
    /// in the first and --right in the second
    #[arg(value_name = "INPUT", num_args = 1..=2, required = true)]
    inputs: Vec<PathBuf>,

    #[command(flatten)]
    common: CommonArgs,

    /// Name of the first chart
    #[arg(long, value_name = "NAME")]
    left: String,

    /// Name of the second chart
    #[arg(long, value_name = "NAME")]
    right: String,

    /// Output encoding: text, json, or csv
    #[arg(long, default_value = "text", value_name = "FORMAT")]
    format: String,

    /// Write the result here instead of standard output
    #[arg(short = 'o', long = "output", value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BatchArgs {
    /// Chart table file, CSV or JSON
    #[arg(value_name = "INPUT")]
    input: PathBuf,

    /// Pairs manifest: a JSON list of {"left", "right"} chart names
    #[arg(value_name = "PAIRS")]
    pairs: PathBuf,

    #[command(flatten)]
    common: CommonArgs,

    /// Variance divisor: population (m) or sample (m - 1)
    #[arg(long, default_value = "population", value_name = "KIND")]
    variance: String,

    /// Rescale each pair with its own auto constant; the summary then
    /// carries a warning because the pooled scores are not comparable
    #[arg(long)]
    per_pair_scale: bool,

    /// Output encoding: text, json, or csv
    #[arg(long, default_value = "text", value_name = "FORMAT")]
    format: String,

    /// Write the results here instead of standard output
    #[arg(short = 'o', long = "output", value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Chart table file, CSV or JSON; with two files, --left is looked up
    /// in the first and --right in the second
    #[arg(value_name = "INPUT", num_args = 1..=2, required = true)]
    inputs: Vec<PathBuf>,

    #[command(flatten)]
    common: CommonArgs,

    /// Name of the first chart
    #[arg(long, value_name = "NAME")]
    left: String,

    /// Name of the second chart
    #[arg(long, value_name = "NAME")]
    right: String,

    /// Canvas width in pixels, at least 64
    #[arg(long, default_value = "640", value_name = "PX")]
    width: String,

    /// Canvas height in pixels, at least 64
    #[arg(long, default_value = "480", value_name = "PX")]
    height: String,

    /// Print each segment's value inside its rectangle
    #[arg(long)]
    show_values: bool,

    /// Destination SVG file
    #[arg(short = 'o', long = "output", value_name = "PATH")]
    output: PathBuf,
}

/// Anything that can stop a run, tagged with enough context for a one-line
/// diagnostic. `exit_code` maps parse failures to 2 and everything else to 1.
enum CliError {
    Flag(String),
    Io {
        path: PathBuf,
        action: &'static str,
        source: std::io::Error,
    },
    Lib {
        path: Option<PathBuf>,
        source: Error,
    },
}

impl CliError {
    fn lib(path: &Path, source: impl Into<Error>) -> Self {
        CliError::Lib {
            path: Some(path.to_path_buf()),
            source: source.into(),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib { source, .. } if source.is_parse() => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Flag(message) => write!(f, "{message}"),
            CliError::Io {
                path,
                action,
                source,
            } => write!(f, "cannot {action} {}: {source}", path.display()),
            CliError::Lib {
                path: Some(path),
                source,
            } => write!(f, "{}: {source}", path.display()),
            CliError::Lib { path: None, source } => write!(f, "{source}"),
        }
    }
}

fn parse_order(text: &str) -> Result<MetricSpec, CliError> {
    let order: f64 = text
        .trim()
        .parse()
        .map_err(|_| CliError::Flag(format!("--metric-order must be a number, got {text:?}")))?;
    MetricSpec::new(order).map_err(|e| CliError::Flag(format!("--metric-order: {e}")))
}

fn parse_scale(text: &str) -> Result<ScaleSpec, CliError> {
    let trimmed = text.trim();
    if trimmed.eq_ignore_ascii_case("auto") {
        return Ok(ScaleSpec::Auto);
    }
    let constant: f64 = trimmed.parse().map_err(|_| {
        CliError::Flag(format!(
            "--scale must be a positive number or \"auto\", got {text:?}"
        ))
    })?;
    ScaleSpec::explicit(constant).map_err(|e| CliError::Flag(format!("--scale: {e}")))
}

fn parse_precision(text: &str) -> Result<usize, CliError> {
    let digits: usize = text
        .trim()
        .parse()
        .map_err(|_| CliError::Flag(format!("--precision must be an integer, got {text:?}")))?;
    if !(1..=17).contains(&digits) {
        return Err(CliError::Flag(format!(
            "--precision must be between 1 and 17, got {digits}"
        )));
    }
    Ok(digits)
}

fn parse_format(text: &str) -> Result<OutputFormat, CliError> {
    match text.trim() {
        "text" => Ok(OutputFormat::Text),
        "json" => Ok(OutputFormat::Json),
        "csv" => Ok(OutputFormat::Csv),
        other => Err(CliError::Flag(format!(
            "--format must be text, json, or csv, got {other:?}"
        ))),
    }
}

fn parse_variance(text: &str) -> Result<VarianceKind, CliError> {
    match text.trim() {
        "population" => Ok(VarianceKind::Population),
        "sample" => Ok(VarianceKind::Sample),
        other => Err(CliError::Flag(format!(
            "--variance must be population or sample, got {other:?}"
        ))),
    }
}

fn parse_canvas(flag: &str, text: &str) -> Result<u32, CliError> {
    text.trim().parse().map_err(|_| {
        CliError::Flag(format!(
            "{flag} must be a whole number of pixels, got {text:?}"
        ))
    })
}

/// Picks the decoder by file extension, falling back to a content sniff so
/// extensionless paths and pipes still work.
fn load_table(path: &Path) -> Result<ChartTable, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        action: "read",
        source: e,
    })?;
    let extension = path
        .extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase());
    let looks_like_json = match extension.as_deref() {
        Some("json") => true,
        Some("csv") => false,
        _ => bytes
            .iter()
            .find(|b| !b.is_ascii_whitespace())
            .is_some_and(|b| *b == b'{'),
    };
    let table = if looks_like_json {
        parse_json(&bytes)
    } else {
        parse_csv(&bytes)
    };
    table.map_err(|source| CliError::Lib {
        path: Some(path.to_path_buf()),
        source,
    })
}

fn find_chart<'t>(
    table: &'t ChartTable,
    name: &str,
    path: &Path,
) -> Result<&'t StackedBarChart, CliError> {
    table
        .get(name)
        .ok_or_else(|| CliError::lib(path, Error::UnknownChart(name.to_string())))
}

/// Resolves --left/--right against one or two table files. With a single
/// file both names are looked up there; with two, each name gets its own.
fn load_pair_inputs(
    inputs: &[PathBuf],
    left: &str,
    right: &str,
) -> Result<(StackedBarChart, StackedBarChart), CliError> {
    let first = load_table(&inputs[0])?;
    if inputs.len() == 2 {
        let second = load_table(&inputs[1])?;
        Ok((
            find_chart(&first, left, &inputs[0])?.clone(),
            find_chart(&second, right, &inputs[1])?.clone(),
        ))
    } else {
        Ok((
            find_chart(&first, left, &inputs[0])?.clone(),
            find_chart(&first, right, &inputs[0])?.clone(),
        ))
    }
}

fn score_pair(
    left: StackedBarChart,
    right: StackedBarChart,
    by_label: bool,
    metric: MetricSpec,
    scale: ScaleSpec,
    context: &Path,
) -> Result<(ChartPair, ComparisonResult), CliError> {
    let pair = align_pair(left, right, by_label).map_err(|e| CliError::lib(context, e))?;
    let result = compare_pair(&pair, metric, scale).map_err(|e| CliError::lib(context, e))?;
    Ok((pair, result))
}

fn emit(target: Option<&Path>, text: &str) -> Result<(), CliError> {
    match target {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io {
            path: path.to_path_buf(),
            action: "write",
            source: e,
        }),
    }
}

fn cmd_compare(args: &CompareArgs) -> Result<(), CliError> {
    let metric = parse_order(&args.common.metric_order)?;
    let scale = parse_scale(&args.common.scale)?;
    let precision = parse_precision(&args.common.precision)?;
    let format = parse_format(&args.format)?;

    let (left, right) = load_pair_inputs(&args.inputs, &args.left, &args.right)?;
    let (pair, result) = score_pair(
        left,
        right,
        args.common.align_by_label,
        metric,
        scale,
        &args.inputs[0],
    )?;
    let text = serialize_comparison(
        pair.left().name(),
        pair.right().name(),
        &result,
        format,
        precision,
    );
    emit(args.output.as_deref(), &text)
}

fn cmd_batch(args: &BatchArgs) -> Result<(), CliError> {
    let metric = parse_order(&args.common.metric_order)?;
    let scale = parse_scale(&args.common.scale)?;
    let precision = parse_precision(&args.common.precision)?;
    let format = parse_format(&args.format)?;
    let variance = parse_variance(&args.variance)?;
    if args.per_pair_scale && !matches!(scale, ScaleSpec::Auto) {
        return Err(CliError::Flag(
            "--per-pair-scale conflicts with an explicit --scale constant".to_string(),
        ));
    }

    let table = load_table(&args.input)?;
    let manifest_bytes = fs::read(&args.pairs).map_err(|e| CliError::Io {
        path: args.pairs.clone(),
        action: "read",
        source: e,
    })?;
    let manifest =
        parse_pairs_manifest(&manifest_bytes).map_err(|e| CliError::lib(&args.pairs, e))?;

    // Resolve every name up front so a typo in the manifest fails before any
    // scoring happens.
    let mut resolved = Vec::with_capacity(manifest.len());
    for (left_name, right_name) in &manifest {
        resolved.push((
            find_chart(&table, left_name, &args.pairs)?,
            find_chart(&table, right_name, &args.pairs)?,
        ));
    }

    // One constant for the whole run keeps the pooled scores comparable.
    // Auto derives it from every chart the manifest touches; an explicit -c
    // is already shared. --per-pair-scale opts out and taints the summary.
    let pair_scale = if args.per_pair_scale {
        ScaleSpec::Auto
    } else {
        match scale {
            ScaleSpec::Auto => {
                let mut referenced: Vec<&StackedBarChart> = Vec::new();
                for (left, right) in &resolved {
                    for chart in [*left, *right] {
                        if !referenced.iter().any(|c| c.name() == chart.name()) {
                            referenced.push(chart);
                        }
                    }
                }
                let shared = auto_scale(referenced).map_err(|e| CliError::lib(&args.pairs, e))?;
                ScaleSpec::explicit(shared).map_err(|e| CliError::lib(&args.pairs, e))?
            }
            explicit => explicit,
        }
    };

    let mut collection = PairCollection::new();
    for ((left, right), (left_name, right_name)) in resolved.into_iter().zip(&manifest) {
        let (_, result) = score_pair(
            left.clone(),
            right.clone(),
            args.common.align_by_label,
            metric,
            pair_scale,
            &args.input,
        )?;
        collection.push(format!("{left_name}|{right_name}"), result);
    }

    let summary = if args.per_pair_scale {
        collection.summarize_mixed_scale(variance)
    } else {
        collection.summarize(variance)
    }
    .map_err(|e| CliError::lib(&args.pairs, e))?;

    let text = serialize_results(&collection, &summary, format, precision);
    emit(args.output.as_deref(), &text)
}

fn cmd_render(args: &RenderArgs) -> Result<(), CliError> {
    let metric = parse_order(&args.common.metric_order)?;
    let scale = parse_scale(&args.common.scale)?;
    let precision = parse_precision(&args.common.precision)?;
    let width = parse_canvas("--width", &args.width)?;
    let height = parse_canvas("--height", &args.height)?;

    let (left, right) = load_pair_inputs(&args.inputs, &args.left, &args.right)?;
    let (pair, result) = score_pair(
        left,
        right,
        args.common.align_by_label,
        metric,
        scale,
        &args.inputs[0],
    )?;

    let spec = RenderSpec {
        width,
        height,
        show_values: args.show_values,
        precision,
        ..RenderSpec::default()
    };
    let svg = render_pair(&pair, &result, &spec).map_err(|e| CliError::Lib {
        path: None,
        source: e.into(),
    })?;
    fs::write(&args.output, svg).map_err(|e| CliError::Io {
        path: args.output.clone(),
        action: "write",
        source: e,
    })?;

    // The triple always goes to standard output so the file write stays
    // scriptable without a second invocation.
    let text = serialize_comparison(
        pair.left().name(),
        pair.right().name(),
        &result,
        OutputFormat::Text,
        precision,
    );
    print!("{text}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Compare(args) => cmd_compare(args),
        Command::Batch(args) => cmd_batch(args),
        Command::Render(args) => cmd_render(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}
