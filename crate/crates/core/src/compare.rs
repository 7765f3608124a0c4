//! The similarity score and the end-to-end comparison of one chart pair.
//!
//! A distance `d >= 0` maps to a similarity `s = e^(-d)`, so `s` is always in
//! `(0, 1]`, equals 1 exactly when the charts coincide, and decays smoothly
//! as they drift apart. There are no tuning parameters.

use serde::Serialize;

use crate::chart::ChartPair;
use crate::error::SimError;
use crate::metric::{minkowski_distance, MetricSpec};
use crate::scale::{auto_scale, rescale, ScaleSpec};

/// `s = e^(-d)` for a finite, nonnegative distance.
pub fn similarity(d: f64) -> Result<f64, SimError> {
    if d.is_nan() || d.is_infinite() {
        return Err(SimError::NonFiniteDistance(d));
    }
    if d < 0.0 {
        return Err(SimError::NegativeDistance(d));
    }
    Ok((-d).exp())
}

/// The outcome of scoring one pair: the similarity `s`, the distance `d` it
/// came from, and the metric order `r` and scale constant `c` under which
/// both were computed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonResult {
    s: f64,
    d: f64,
    r: f64,
    c: f64,
}

impl ComparisonResult {
    /// Wraps an already-computed distance together with its parameters.
    pub fn from_distance(d: f64, metric: MetricSpec, c: f64) -> Result<Self, SimError> {
        if !c.is_finite() || c <= 0.0 {
            return Err(SimError::NonPositiveScale(c));
        }
        let s = similarity(d)?;
        Ok(ComparisonResult {
            s,
            d,
            r: metric.order(),
            c,
        })
    }

    pub fn similarity(&self) -> f64 {
        self.s
    }

    pub fn distance(&self) -> f64 {
        self.d
    }

    pub fn order(&self) -> f64 {
        self.r
    }

    pub fn scale(&self) -> f64 {
        self.c
    }
}

/// Scores an aligned pair: picks `c` (from the pair under [`ScaleSpec::Auto`],
/// or as given), rescales both value vectors, takes the Minkowski distance of
/// the requested order, and maps it through `e^(-d)`.
pub fn compare_pair(
    pair: &ChartPair,
    metric: MetricSpec,
    scale: ScaleSpec,
) -> Result<ComparisonResult, SimError> {
    let c = match scale {
        ScaleSpec::Auto => auto_scale([pair.left(), pair.right()])?,
        ScaleSpec::Explicit(c) => {
            if !c.is_finite() || c <= 0.0 {
                return Err(SimError::NonPositiveScale(c));
            }
            c
        }
    };
    let x = rescale(&pair.left().to_vector(), c)?;
    let y = rescale(&pair.right().to_vector(), c)?;
    let d = minkowski_distance(&x, &y, metric)?;
    ComparisonResult::from_distance(d, metric, c)
}
