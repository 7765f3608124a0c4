//! Reading chart tables and pair manifests; writing reports and results.
//!
//! Errors here are about the shape of the input bytes. Errors about the
//! meaning of well-formed values (a negative segment, an empty chart) come
//! from chart validation instead, so callers can tell the two apart.

mod csv;
mod json;
mod report;

pub use csv::parse_csv;
pub use json::{parse_json, parse_pairs_manifest, serialize_json};
pub use report::{
    format_report, serialize_comparison, serialize_results, OutputFormat, ReportTriple,
};

use serde::Serialize;
use thiserror::Error;

use crate::chart::{labels_eq, StackedBarChart};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("input is not valid UTF-8 (first invalid byte at offset {0})")]
    InvalidUtf8(usize),

    #[error("line {line}: {reason}")]
    MalformedCsv { line: usize, reason: String },

    #[error("line {line}: expected {expected} cells, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}, column {column}: {value:?} is not a number")]
    NonNumericValue {
        line: usize,
        column: usize,
        value: String,
    },

    #[error("duplicate chart name {0:?}")]
    DuplicateChartName(String),

    #[error("line {line}: duplicate segment label {label:?}")]
    DuplicateSegmentLabel { line: usize, label: String },

    #[error("{path}: {reason}")]
    SchemaViolation { path: String, reason: String },

    #[error("chart {chart:?} does not share the table's segment labels (first difference at position {position})")]
    MisalignedLabels { chart: String, position: usize },

    #[error("input contains no charts")]
    EmptyCollection,
}

/// A set of charts over one shared segment-label sequence, so any two of
/// them can be compared positionally without further alignment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChartTable {
    charts: Vec<StackedBarChart>,
}

impl ChartTable {
    /// Accepts already-validated charts; rejects an empty set, repeated
    /// names, and label sequences that differ from the first chart's.
    pub fn new(charts: Vec<StackedBarChart>) -> Result<Self, ParseError> {
        if charts.is_empty() {
            return Err(ParseError::EmptyCollection);
        }
        for (i, chart) in charts.iter().enumerate() {
            if charts[..i]
                .iter()
                .any(|prev| labels_eq(prev.name(), chart.name()))
            {
                return Err(ParseError::DuplicateChartName(chart.name().to_string()));
            }
        }
        let reference: Vec<&str> = charts[0].labels().collect();
        for chart in &charts[1..] {
            let labels: Vec<&str> = chart.labels().collect();
            if labels.len() != reference.len() {
                return Err(ParseError::MisalignedLabels {
                    chart: chart.name().to_string(),
                    position: labels.len().min(reference.len()),
                });
            }
            for (position, (have, want)) in labels.iter().zip(&reference).enumerate() {
                if !labels_eq(have, want) {
                    return Err(ParseError::MisalignedLabels {
                        chart: chart.name().to_string(),
                        position,
                    });
                }
            }
        }
        Ok(ChartTable { charts })
    }

    pub fn charts(&self) -> &[StackedBarChart] {
        &self.charts
    }

    /// Looks a chart up by name, ignoring surrounding whitespace.
    pub fn get(&self, name: &str) -> Option<&StackedBarChart> {
        self.charts.iter().find(|c| labels_eq(c.name(), name))
    }

    /// The segment labels every chart in the table shares.
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.charts[0].labels()
    }

    pub fn len(&self) -> usize {
        self.charts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.charts.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::Segment;

    fn chart(name: &str, segs: &[(&str, f64)]) -> StackedBarChart {
        StackedBarChart::new(
            name,
            segs.iter().map(|(l, v)| Segment::new(*l, *v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn table_accepts_aligned_charts() {
        let table = ChartTable::new(vec![
            chart("A", &[("x", 1.0), ("y", 2.0)]),
            chart("B", &[("x", 3.0), ("y", 4.0)]),
        ])
        .unwrap();
        assert_eq!(table.len(), 2);
        assert_eq!(table.get("B").unwrap().name(), "B");
        assert_eq!(table.get(" B ").unwrap().name(), "B");
        assert!(table.get("C").is_none());
        assert_eq!(table.labels().collect::<Vec<_>>(), ["x", "y"]);
    }

    #[test]
    fn table_rejects_empty_set() {
        assert_eq!(
            ChartTable::new(vec![]).unwrap_err(),
            ParseError::EmptyCollection
        );
    }

    #[test]
    fn table_rejects_duplicate_names() {
        let err = ChartTable::new(vec![chart("A", &[("x", 1.0)]), chart(" A ", &[("x", 2.0)])])
            .unwrap_err();
        assert_eq!(err, ParseError::DuplicateChartName(" A ".into()));
    }

    #[test]
    fn table_rejects_misaligned_labels() {
        let err = ChartTable::new(vec![
            chart("A", &[("x", 1.0), ("y", 2.0)]),
            chart("B", &[("x", 3.0), ("z", 4.0)]),
        ])
        .unwrap_err();
        assert_eq!(
            err,
            ParseError::MisalignedLabels {
                chart: "B".into(),
                position: 1
            }
        );

        let err = ChartTable::new(vec![
            chart("A", &[("x", 1.0), ("y", 2.0)]),
            chart("B", &[("x", 3.0)]),
        ])
        .unwrap_err();
        assert_eq!(
            err,
            ParseError::MisalignedLabels {
                chart: "B".into(),
                position: 1
            }
        );
    }
}
