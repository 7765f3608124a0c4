//! The standardized report triple and emission of whole-run results.
//!
//! Human-readable output rounds `s` to a chosen number of decimals; the
//! machine formats always carry full precision so that rounding never leaks
//! into downstream computation.

use serde_json::{json, Value};

use crate::aggregate::{CollectionSummary, PairCollection};
use crate::compare::ComparisonResult;

/// One comparison's reportable facts: the similarity `s` and the metric
/// order `r` and scale constant `c` it was computed under, plus how many
/// decimals of `s` to display.
///
/// `s`, `r`, and `c` are expected to be finite and nonnegative (guaranteed
/// when the triple comes from a [`ComparisonResult`]); `precision` should be
/// at least 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportTriple {
    pub s: f64,
    pub r: f64,
    pub c: f64,
    pub precision: usize,
}

impl ReportTriple {
    pub fn from_result(result: &ComparisonResult, precision: usize) -> Self {
        ReportTriple {
            s: result.similarity(),
            r: result.order(),
            c: result.scale(),
            precision,
        }
    }
}

/// Renders `(s=<num>, r=<num>, c=<num>)`: `s` rounded half to even to the
/// triple's precision, `r` and `c` in plain decimal without trailing zeros.
pub fn format_report(triple: &ReportTriple) -> String {
    format!(
        "(s={:.prec$}, r={}, c={})",
        triple.s,
        triple.r,
        triple.c,
        prec = triple.precision
    )
}

/// Output encodings shared by the library's emitters and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Minimal RFC 4180 quoting for result ids, which may carry arbitrary chart
/// names. Number cells never need it.
fn csv_field(value: &str) -> String {
    if value.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_string()
    }
}

fn pair_json(id: Option<&str>, result: &ComparisonResult) -> Value {
    let mut object = json!({
        "s": result.similarity(),
        "d": result.distance(),
        "r": result.order(),
        "c": result.scale(),
    });
    if let Some(id) = id {
        object["id"] = json!(id);
    }
    object
}

const MIXED_SCALE_WARNING: &str =
    "per-pair scale constants differ; scores were pooled across scales";

/// Emits one comparison in the requested format. Text mode is exactly one
/// report-grammar line; the machine formats add the chart names and the
/// underlying distance at full precision.
pub fn serialize_comparison(
    left: &str,
    right: &str,
    result: &ComparisonResult,
    format: OutputFormat,
    precision: usize,
) -> String {
    match format {
        OutputFormat::Text => {
            let triple = ReportTriple::from_result(result, precision);
            format!("{}\n", format_report(&triple))
        }
        OutputFormat::Json => {
            let mut object = pair_json(None, result);
            object["left"] = json!(left);
            object["right"] = json!(right);
            let mut text = serde_json::to_string_pretty(&object).expect("finite fields");
            text.push('\n');
            text
        }
        OutputFormat::Csv => {
            let id = csv_field(&format!("{left}|{right}"));
            format!(
                "id,s,d,r,c\n{id},{},{},{},{}\n",
                result.similarity(),
                result.distance(),
                result.order(),
                result.scale()
            )
        }
    }
}

/// Emits a scored collection and its pooled summary. Text mode prints one
/// report line per pair and then the summary; JSON and CSV carry full
/// precision. Output is byte-identical across calls with equal inputs.
pub fn serialize_results(
    collection: &PairCollection,
    summary: &CollectionSummary,
    format: OutputFormat,
    precision: usize,
) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for (id, result) in collection.results() {
                let triple = ReportTriple::from_result(result, precision);
                out.push_str(&format!("{id}: {}\n", format_report(&triple)));
            }
            out.push_str(&format!("SIM_avg={:.precision$}\n", summary.mean));
            out.push_str(&format!("variance={:.precision$}\n", summary.variance));
            out.push_str(&format!("std_dev={:.precision$}\n", summary.std_dev));
            out.push_str(&format!("m={}\n", summary.m));
            if summary.scale.is_none() {
                out.push_str(&format!("warning: {MIXED_SCALE_WARNING}\n"));
            }
            out
        }
        OutputFormat::Json => {
            let pairs: Vec<Value> = collection
                .results()
                .iter()
                .map(|(id, result)| pair_json(Some(id), result))
                .collect();
            let mut summary_json = json!({
                "m": summary.m,
                "mean": summary.mean,
                "variance": summary.variance,
                "std_dev": summary.std_dev,
                "variance_kind": summary.variance_kind,
                "r": summary.order,
                "c": summary.scale,
            });
            if summary.scale.is_none() {
                summary_json["warning"] = json!(MIXED_SCALE_WARNING);
            }
            let root = json!({ "pairs": pairs, "summary": summary_json });
            let mut text = serde_json::to_string_pretty(&root).expect("finite fields");
            text.push('\n');
            text
        }
        OutputFormat::Csv => {
            let mut out = String::from("id,s,d,r,c,m,mean,variance,std_dev\n");
            for (id, result) in collection.results() {
                out.push_str(&format!(
                    "{},{},{},{},{},,,,\n",
                    csv_field(id),
                    result.similarity(),
                    result.distance(),
                    result.order(),
                    result.scale()
                ));
            }
            let scale = summary.scale.map(|c| c.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "summary,,,{},{scale},{},{},{},{}\n",
                summary.order, summary.m, summary.mean, summary.variance, summary.std_dev
            ));
            out
        }
    }
}
