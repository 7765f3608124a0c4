//! Domain types for stacked bar charts and the alignment checks that make a
//! pair of charts comparable as vectors.
//!
//! A bar is a whole; its segments are the parts of that whole. Two charts can
//! only be compared when their segments line up one to one, so [`ChartPair`]
//! is constructed exclusively through [`align_pair`].

use serde::Serialize;

/// Validation failures for charts and chart pairs.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ChartError {
    #[error("chart {0:?} has no segments")]
    EmptyChart(String),

    #[error("chart {chart:?}: segment {index} has an empty label")]
    EmptyLabel { chart: String, index: usize },

    #[error("chart {chart:?}: segment {index} has negative value {value}")]
    NegativeValue {
        chart: String,
        index: usize,
        value: f64,
    },

    #[error("chart {chart:?}: segment {index} has non-finite value {value}")]
    NonFiniteValue {
        chart: String,
        index: usize,
        value: f64,
    },

    #[error("chart {chart:?}: duplicate segment label {label:?}")]
    DuplicateLabel { chart: String, label: String },

    #[error("charts have different segment counts: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("segment labels differ at position {position}: {left:?} vs {right:?}")]
    LabelMismatch {
        position: usize,
        left: String,
        right: String,
    },

    #[error("right chart has no segment labeled {label:?}")]
    MissingLabel { label: String },
}

/// One labeled part of a bar. Values are magnitudes in the chart's native
/// unit and must be finite and nonnegative; zero is allowed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Segment {
    label: String,
    value: f64,
}

impl Segment {
    pub fn new(label: impl Into<String>, value: f64) -> Self {
        Segment {
            label: label.into(),
            value,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn value(&self) -> f64 {
        self.value
    }
}

/// Labels are compared case-sensitively after trimming surrounding whitespace.
pub(crate) fn labels_eq(a: &str, b: &str) -> bool {
    a.trim() == b.trim()
}

/// A stacked bar: a named whole with an ordered, non-empty list of segments.
///
/// Invariants (enforced by [`StackedBarChart::new`]):
/// - at least one segment,
/// - segment labels pairwise distinct (after trimming),
/// - every value finite and nonnegative.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StackedBarChart {
    name: String,
    segments: Vec<Segment>,
}

impl StackedBarChart {
    pub fn new(name: impl Into<String>, segments: Vec<Segment>) -> Result<Self, ChartError> {
        let chart = StackedBarChart {
            name: name.into(),
            segments,
        };
        chart.validate()?;
        Ok(chart)
    }

    /// Checks every chart invariant, reporting the first violation and the
    /// offending segment index.
    pub fn validate(&self) -> Result<(), ChartError> {
        if self.segments.is_empty() {
            return Err(ChartError::EmptyChart(self.name.clone()));
        }
        for (index, seg) in self.segments.iter().enumerate() {
            if seg.label.trim().is_empty() {
                return Err(ChartError::EmptyLabel {
                    chart: self.name.clone(),
                    index,
                });
            }
            if !seg.value.is_finite() {
                return Err(ChartError::NonFiniteValue {
                    chart: self.name.clone(),
                    index,
                    value: seg.value,
                });
            }
            if seg.value < 0.0 {
                return Err(ChartError::NegativeValue {
                    chart: self.name.clone(),
                    index,
                    value: seg.value,
                });
            }
        }
        for (i, seg) in self.segments.iter().enumerate() {
            if self.segments[..i]
                .iter()
                .any(|s| labels_eq(&s.label, &seg.label))
            {
                return Err(ChartError::DuplicateLabel {
                    chart: self.name.clone(),
                    label: seg.label.clone(),
                });
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.segments.iter().map(|s| s.label.as_str())
    }

    /// The segment values in segment order, ready for rescaling.
    pub fn to_vector(&self) -> Vec<f64> {
        self.segments.iter().map(|s| s.value).collect()
    }

    /// Sum of all segment values (the height of the whole bar).
    pub fn total(&self) -> f64 {
        self.segments.iter().map(|s| s.value).sum()
    }
}

/// Two charts whose segments correspond one to one, in order.
/// Built only by [`align_pair`], so the invariants always hold.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPair {
    left: StackedBarChart,
    right: StackedBarChart,
}

impl ChartPair {
    pub fn left(&self) -> &StackedBarChart {
        &self.left
    }

    pub fn right(&self) -> &StackedBarChart {
        &self.right
    }
}

/// Validates both charts and checks that their segments map one to one.
///
/// With `by_label = false` the label sequences must already be identical;
/// with `by_label = true` the right chart's segments are reordered to match
/// the left chart's label order. Reordering never changes any (label, value)
/// association, only positions.
pub fn align_pair(
    left: StackedBarChart,
    right: StackedBarChart,
    by_label: bool,
) -> Result<ChartPair, ChartError> {
    left.validate()?;
    right.validate()?;
    if left.segments.len() != right.segments.len() {
        return Err(ChartError::LengthMismatch {
            left: left.segments.len(),
            right: right.segments.len(),
        });
    }

    let right = if by_label {
        let mut reordered = Vec::with_capacity(right.segments.len());
        for seg in &left.segments {
            let matched = right
                .segments
                .iter()
                .find(|s| labels_eq(&s.label, &seg.label))
                .ok_or_else(|| ChartError::MissingLabel {
                    label: seg.label.clone(),
                })?;
            reordered.push(matched.clone());
        }
        StackedBarChart {
            name: right.name,
            segments: reordered,
        }
    } else {
        for (position, (l, r)) in left.segments.iter().zip(&right.segments).enumerate() {
            if !labels_eq(&l.label, &r.label) {
                return Err(ChartError::LabelMismatch {
                    position,
                    left: l.label.clone(),
                    right: r.label.clone(),
                });
            }
        }
        right
    };

    Ok(ChartPair { left, right })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart(name: &str, segs: &[(&str, f64)]) -> StackedBarChart {
        StackedBarChart::new(
            name,
            segs.iter().map(|(l, v)| Segment::new(*l, *v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn valid_chart_accepted() {
        let c = chart("A", &[("x", 500.0), ("y", 1000.0), ("z", 300.0)]);
        assert_eq!(c.to_vector(), vec![500.0, 1000.0, 300.0]);
        assert_eq!(c.total(), 1800.0);
    }

    #[test]
    fn empty_chart_rejected() {
        let err = StackedBarChart::new("A", vec![]).unwrap_err();
        assert_eq!(err, ChartError::EmptyChart("A".into()));
    }

    #[test]
    fn negative_value_rejected() {
        let err = StackedBarChart::new("A", vec![Segment::new("x", 1.0), Segment::new("y", -5.0)])
            .unwrap_err();
        assert!(matches!(err, ChartError::NegativeValue { index: 1, .. }));
    }

    #[test]
    fn non_finite_value_rejected() {
        for bad in [f64::NAN, f64::INFINITY, f64::NEG_INFINITY] {
            let err = StackedBarChart::new("A", vec![Segment::new("x", bad)]).unwrap_err();
            assert!(matches!(err, ChartError::NonFiniteValue { index: 0, .. }));
        }
    }

    #[test]
    fn zero_value_allowed() {
        assert!(StackedBarChart::new("A", vec![Segment::new("x", 0.0)]).is_ok());
    }

    #[test]
    fn duplicate_label_rejected() {
        let err = StackedBarChart::new("A", vec![Segment::new("x", 1.0), Segment::new("x", 2.0)])
            .unwrap_err();
        assert!(matches!(err, ChartError::DuplicateLabel { ref label, .. } if label == "x"));
    }

    #[test]
    fn duplicate_label_detected_after_trim() {
        let err = StackedBarChart::new("A", vec![Segment::new("x", 1.0), Segment::new(" x ", 2.0)])
            .unwrap_err();
        assert!(matches!(err, ChartError::DuplicateLabel { .. }));
    }

    #[test]
    fn empty_label_rejected() {
        let err = StackedBarChart::new("A", vec![Segment::new("  ", 1.0)]).unwrap_err();
        assert!(matches!(err, ChartError::EmptyLabel { index: 0, .. }));
    }

    #[test]
    fn single_segment_vector() {
        assert_eq!(chart("A", &[("x", 42.0)]).to_vector(), vec![42.0]);
    }

    #[test]
    fn strict_alignment_keeps_order() {
        let l = chart("L", &[("x", 1.0), ("y", 2.0), ("z", 3.0)]);
        let r = chart("R", &[("x", 4.0), ("y", 5.0), ("z", 6.0)]);
        let pair = align_pair(l.clone(), r.clone(), false).unwrap();
        assert_eq!(pair.left(), &l);
        assert_eq!(pair.right(), &r);
    }

    #[test]
    fn strict_alignment_rejects_reordered_labels() {
        let l = chart("L", &[("x", 1.0), ("y", 2.0), ("z", 3.0)]);
        let r = chart("R", &[("z", 6.0), ("x", 4.0), ("y", 5.0)]);
        let err = align_pair(l, r, false).unwrap_err();
        assert!(matches!(err, ChartError::LabelMismatch { position: 0, .. }));
    }

    #[test]
    fn by_label_alignment_reorders_right() {
        let l = chart("L", &[("x", 1.0), ("y", 2.0), ("z", 3.0)]);
        let r = chart("R", &[("z", 6.0), ("x", 4.0), ("y", 5.0)]);
        let pair = align_pair(l, r, true).unwrap();
        let labels: Vec<&str> = pair.right().labels().collect();
        assert_eq!(labels, ["x", "y", "z"]);
        assert_eq!(pair.right().to_vector(), vec![4.0, 5.0, 6.0]);
    }

    #[test]
    fn length_mismatch_rejected() {
        let l = chart("L", &[("x", 1.0), ("y", 2.0), ("z", 3.0)]);
        let r = chart("R", &[("x", 4.0), ("y", 5.0)]);
        let err = align_pair(l, r, true).unwrap_err();
        assert_eq!(err, ChartError::LengthMismatch { left: 3, right: 2 });
    }

    #[test]
    fn missing_label_rejected_in_by_label_mode() {
        let l = chart("L", &[("x", 1.0), ("y", 2.0)]);
        let r = chart("R", &[("x", 4.0), ("q", 5.0)]);
        let err = align_pair(l, r, true).unwrap_err();
        assert_eq!(err, ChartError::MissingLabel { label: "y".into() });
    }
}
