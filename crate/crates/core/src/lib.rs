//! Objective similarity scoring for pairs of stacked bar charts.
//!
//! Two charts are compared by rescaling their segment-value vectors with a
//! shared constant `c`, taking a Minkowski distance of order `r >= 1`
//! between them, and mapping that distance through `s = e^(-d)`. The score
//! is parameter-free beyond `r` and `c`, lands in `(0, 1]`, and hits 1
//! exactly when the charts coincide. Because a bare score is meaningless
//! without its parameters, reports carry all three values in the form
//! `(s=_, r=_, c=_)`.
//!
//! ```
//! use stacksim::{
//!     align_pair, compare_pair, format_report, MetricSpec, ReportTriple, ScaleSpec,
//!     Segment, StackedBarChart,
//! };
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let left = StackedBarChart::new(
//!     "X",
//!     vec![
//!         Segment::new("A", 500.0),
//!         Segment::new("B", 1000.0),
//!         Segment::new("C", 300.0),
//!     ],
//! )?;
//! let right = StackedBarChart::new(
//!     "Y",
//!     vec![
//!         Segment::new("A", 1000.0),
//!         Segment::new("B", 500.0),
//!         Segment::new("C", 2000.0),
//!     ],
//! )?;
//!
//! let pair = align_pair(left, right, false)?;
//! let result = compare_pair(&pair, MetricSpec::EUCLIDEAN, ScaleSpec::Auto)?;
//! let report = format_report(&ReportTriple::from_result(&result, 2));
//! assert_eq!(report, "(s=0.16, r=2, c=1000)");
//! # Ok(())
//! # }
//! ```
//!
//! Collections of scored pairs pool into mean, variance, and standard
//! deviation via [`PairCollection`], provided every pair shares one `r` and
//! one `c`. The [`io`] module reads CSV and JSON chart tables and writes
//! results in text, JSON, or CSV; [`render`] draws a pair side by side as
//! SVG for visual inspection.

pub mod aggregate;
pub mod chart;
pub mod compare;
mod error;
pub mod io;
pub mod metric;
pub mod render;
pub mod scale;

pub use aggregate::{CollectionSummary, PairCollection, StatsError, VarianceKind};
pub use chart::{align_pair, ChartError, ChartPair, Segment, StackedBarChart};
pub use compare::{compare_pair, similarity, ComparisonResult};
pub use error::{Error, SimError};
pub use io::{
    format_report, parse_csv, parse_json, parse_pairs_manifest, serialize_comparison,
    serialize_json, serialize_results, ChartTable, OutputFormat, ParseError, ReportTriple,
};
pub use metric::{euclidean_distance, manhattan_distance, minkowski_distance, MetricSpec};
pub use render::{render_pair, RenderError, RenderSpec};
pub use scale::{auto_scale, rescale, ChartVector, ScaleSpec};
