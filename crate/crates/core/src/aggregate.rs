//! Pooling of per-pair similarity scores into collection statistics.
//!
//! Scores are only poolable when every pair was evaluated under the same
//! metric order and the same scale constant; mixing either would average
//! numbers that live on different scales, so both are rejected.

use serde::Serialize;
use thiserror::Error;

use crate::compare::ComparisonResult;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("cannot summarize an empty collection")]
    EmptyCollection,
    #[error("pair {id:?} was scored with metric order {found} but the collection uses {expected}")]
    MixedMetric {
        id: String,
        expected: f64,
        found: f64,
    },
    #[error("pair {id:?} was scored with scale {found} but the collection uses {expected}")]
    MixedScale {
        id: String,
        expected: f64,
        found: f64,
    },
    #[error("sample variance needs at least two pairs, got {m}")]
    InsufficientData { m: usize },
}

/// Which divisor the variance uses: `m` (population) or `m - 1` (sample).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VarianceKind {
    #[default]
    Population,
    Sample,
}

/// An ordered list of scored pairs, each tagged with a caller-chosen id.
#[derive(Debug, Clone, Default)]
pub struct PairCollection {
    entries: Vec<(String, ComparisonResult)>,
}

/// Pooled statistics over the similarity scores of a collection.
///
/// `scale` is `None` only for summaries produced by
/// [`PairCollection::summarize_mixed_scale`], where each pair carried its own
/// constant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CollectionSummary {
    pub mean: f64,
    pub variance: f64,
    pub std_dev: f64,
    pub m: usize,
    pub variance_kind: VarianceKind,
    pub order: f64,
    pub scale: Option<f64>,
}

impl PairCollection {
    pub fn new() -> Self {
        PairCollection::default()
    }

    pub fn from_results(entries: Vec<(String, ComparisonResult)>) -> Self {
        PairCollection { entries }
    }

    pub fn push(&mut self, id: impl Into<String>, result: ComparisonResult) {
        self.entries.push((id.into(), result));
    }

    pub fn results(&self) -> &[(String, ComparisonResult)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn check_uniform_order(&self) -> Result<f64, StatsError> {
        let expected = self.entries[0].1.order();
        for (id, res) in &self.entries {
            if res.order() != expected {
                return Err(StatsError::MixedMetric {
                    id: id.clone(),
                    expected,
                    found: res.order(),
                });
            }
        }
        Ok(expected)
    }

    fn check_uniform_scale(&self) -> Result<f64, StatsError> {
        let expected = self.entries[0].1.scale();
        for (id, res) in &self.entries {
            if res.scale() != expected {
                return Err(StatsError::MixedScale {
                    id: id.clone(),
                    expected,
                    found: res.scale(),
                });
            }
        }
        Ok(expected)
    }

    /// The mean similarity `SIM_avg = (s_1 + ... + s_m) / m`.
    pub fn sim_avg(&self) -> Result<f64, StatsError> {
        if self.entries.is_empty() {
            return Err(StatsError::EmptyCollection);
        }
        self.check_uniform_order()?;
        self.check_uniform_scale()?;
        Ok(self.mean())
    }

    fn mean(&self) -> f64 {
        let sum: f64 = self.entries.iter().map(|(_, r)| r.similarity()).sum();
        sum / self.entries.len() as f64
    }

    fn spread(&self, kind: VarianceKind) -> Result<(f64, f64, f64), StatsError> {
        let m = self.entries.len();
        let mean = self.mean();
        let divisor = match kind {
            VarianceKind::Population => m as f64,
            VarianceKind::Sample => {
                if m < 2 {
                    return Err(StatsError::InsufficientData { m });
                }
                (m - 1) as f64
            }
        };
        let squared: f64 = self
            .entries
            .iter()
            .map(|(_, r)| {
                let diff = r.similarity() - mean;
                diff * diff
            })
            .sum();
        let variance = squared / divisor;
        Ok((mean, variance, variance.sqrt()))
    }

    /// Mean, variance, and standard deviation of the scores, after checking
    /// that every pair shares one metric order and one scale constant.
    pub fn summarize(&self, kind: VarianceKind) -> Result<CollectionSummary, StatsError> {
        if self.entries.is_empty() {
            return Err(StatsError::EmptyCollection);
        }
        let order = self.check_uniform_order()?;
        let scale = self.check_uniform_scale()?;
        let (mean, variance, std_dev) = self.spread(kind)?;
        Ok(CollectionSummary {
            mean,
            variance,
            std_dev,
            m: self.entries.len(),
            variance_kind: kind,
            order,
            scale: Some(scale),
        })
    }

    /// Like [`summarize`](Self::summarize) but tolerates a different scale
    /// constant per pair, for callers that rescaled each pair on its own.
    /// The metric order must still be uniform.
    pub fn summarize_mixed_scale(
        &self,
        kind: VarianceKind,
    ) -> Result<CollectionSummary, StatsError> {
        if self.entries.is_empty() {
            return Err(StatsError::EmptyCollection);
        }
        let order = self.check_uniform_order()?;
        let scale = self.check_uniform_scale().ok();
        let (mean, variance, std_dev) = self.spread(kind)?;
        Ok(CollectionSummary {
            mean,
            variance,
            std_dev,
            m: self.entries.len(),
            variance_kind: kind,
            order,
            scale,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::MetricSpec;
    use approx::assert_relative_eq;

    fn result(d: f64, r: f64, c: f64) -> ComparisonResult {
        ComparisonResult::from_distance(d, MetricSpec::new(r).unwrap(), c).unwrap()
    }

    fn two_reference_pairs() -> PairCollection {
        // Distances of the two worked pairs under r = 2, c = 1000.
        let mut coll = PairCollection::new();
        coll.push("close", result(0.120784932835184, 2.0, 1000.0));
        coll.push("far", result(1.841195263952197, 2.0, 1000.0));
        coll
    }

    #[test]
    fn mean_of_two_scores() {
        let coll = two_reference_pairs();
        assert_relative_eq!(
            coll.sim_avg().unwrap(),
            0.522426123831138,
            max_relative = 1e-12
        );
    }

    #[test]
    fn population_summary_of_two_scores() {
        let coll = two_reference_pairs();
        let summary = coll.summarize(VarianceKind::Population).unwrap();
        assert_relative_eq!(summary.mean, 0.522426123831138, max_relative = 1e-12);
        assert_relative_eq!(summary.variance, 0.132349285349400, max_relative = 1e-12);
        assert_relative_eq!(summary.std_dev, 0.363798413066083, max_relative = 1e-12);
        assert_eq!(summary.m, 2);
        assert_eq!(summary.variance_kind, VarianceKind::Population);
        assert_eq!(summary.order, 2.0);
        assert_eq!(summary.scale, Some(1000.0));
    }

    #[test]
    fn sample_summary_of_two_scores() {
        let coll = two_reference_pairs();
        let summary = coll.summarize(VarianceKind::Sample).unwrap();
        assert_relative_eq!(summary.variance, 0.264698570698801, max_relative = 1e-12);
        assert_relative_eq!(summary.std_dev, 0.514488649727864, max_relative = 1e-12);
    }

    #[test]
    fn empty_collection_is_rejected() {
        let coll = PairCollection::new();
        assert_eq!(coll.sim_avg().unwrap_err(), StatsError::EmptyCollection);
        assert_eq!(
            coll.summarize(VarianceKind::Population).unwrap_err(),
            StatsError::EmptyCollection
        );
        assert!(coll.is_empty());
    }

    #[test]
    fn single_pair_population_variance_is_zero() {
        let mut coll = PairCollection::new();
        coll.push("only", result(0.5, 2.0, 1.0));
        let summary = coll.summarize(VarianceKind::Population).unwrap();
        assert_eq!(summary.variance, 0.0);
        assert_eq!(summary.std_dev, 0.0);
        assert_eq!(summary.m, 1);
    }

    #[test]
    fn single_pair_sample_variance_is_rejected() {
        let mut coll = PairCollection::new();
        coll.push("only", result(0.5, 2.0, 1.0));
        assert_eq!(
            coll.summarize(VarianceKind::Sample).unwrap_err(),
            StatsError::InsufficientData { m: 1 }
        );
    }

    #[test]
    fn mixed_metric_orders_are_rejected() {
        let mut coll = PairCollection::new();
        coll.push("a", result(0.1, 2.0, 1.0));
        coll.push("b", result(0.2, 1.0, 1.0));
        assert!(matches!(
            coll.sim_avg(),
            Err(StatsError::MixedMetric { expected, found, .. })
                if expected == 2.0 && found == 1.0
        ));
        assert!(coll
            .summarize_mixed_scale(VarianceKind::Population)
            .is_err());
    }

    #[test]
    fn mixed_scales_are_rejected_unless_asked_for() {
        let mut coll = PairCollection::new();
        coll.push("a", result(0.1, 2.0, 1000.0));
        coll.push("b", result(0.2, 2.0, 100.0));
        assert!(matches!(
            coll.summarize(VarianceKind::Population),
            Err(StatsError::MixedScale { .. })
        ));
        let summary = coll
            .summarize_mixed_scale(VarianceKind::Population)
            .unwrap();
        assert_eq!(summary.scale, None);
        assert_eq!(summary.m, 2);
    }

    #[test]
    fn uniform_scale_survives_the_mixed_scale_path() {
        let coll = two_reference_pairs();
        let summary = coll
            .summarize_mixed_scale(VarianceKind::Population)
            .unwrap();
        assert_eq!(summary.scale, Some(1000.0));
    }

    #[test]
    fn population_and_sample_variances_are_related_by_m() {
        let mut coll = PairCollection::new();
        for (i, d) in [0.1, 0.4, 0.9, 1.6, 2.5].iter().enumerate() {
            coll.push(format!("p{i}"), result(*d, 2.0, 1.0));
        }
        let pop = coll.summarize(VarianceKind::Population).unwrap();
        let sample = coll.summarize(VarianceKind::Sample).unwrap();
        let m = coll.len() as f64;
        assert_relative_eq!(
            pop.variance,
            sample.variance * (m - 1.0) / m,
            max_relative = 1e-12
        );
    }
}
