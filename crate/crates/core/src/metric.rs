//! Minkowski distances between rescaled chart vectors.
//!
//! The generalized form for order `r >= 1` is
//!
//! `d(x, y) = (sum_i |x_i - y_i|^r)^(1/r)`
//!
//! `r = 1` gives the Manhattan (city-block) distance and `r = 2` the
//! Euclidean distance. All three functions insist that both vectors have the
//! same dimension and were produced with the same scale constant, so a
//! distance can never mix incompatible units.

use crate::error::SimError;
use crate::scale::ChartVector;

/// The order `r` of a Minkowski distance. Values below one break the
/// triangle inequality, so construction rejects them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricSpec {
    r: f64,
}

impl MetricSpec {
    /// Manhattan distance, `r = 1`.
    pub const MANHATTAN: MetricSpec = MetricSpec { r: 1.0 };
    /// Euclidean distance, `r = 2`.
    pub const EUCLIDEAN: MetricSpec = MetricSpec { r: 2.0 };

    pub fn new(r: f64) -> Result<Self, SimError> {
        if !r.is_finite() || r < 1.0 {
            return Err(SimError::InvalidOrder(r));
        }
        Ok(MetricSpec { r })
    }

    pub fn order(&self) -> f64 {
        self.r
    }
}

impl Default for MetricSpec {
    fn default() -> Self {
        MetricSpec::EUCLIDEAN
    }
}

fn check_compatible(x: &ChartVector, y: &ChartVector) -> Result<(), SimError> {
    if x.len() != y.len() {
        return Err(SimError::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.scale() != y.scale() {
        return Err(SimError::ScaleMismatch {
            left: x.scale(),
            right: y.scale(),
        });
    }
    Ok(())
}

/// `d(x, y) = (sum_i |x_i - y_i|^r)^(1/r)` for the order carried by `spec`.
///
/// Evaluated with `powf` for every order, including 1 and 2, so the
/// specialized routes below stay independent checks rather than aliases.
pub fn minkowski_distance(
    x: &ChartVector,
    y: &ChartVector,
    spec: MetricSpec,
) -> Result<f64, SimError> {
    check_compatible(x, y)?;
    let r = spec.r;
    let sum: f64 = x
        .components()
        .iter()
        .zip(y.components())
        .map(|(a, b)| (a - b).abs().powf(r))
        .sum();
    let d = sum.powf(1.0 / r);
    if !d.is_finite() {
        return Err(SimError::NonFiniteDistance(d));
    }
    Ok(d)
}

/// `d(x, y) = sqrt(sum_i (x_i - y_i)^2)`, the `r = 2` case computed without
/// `powf`.
pub fn euclidean_distance(x: &ChartVector, y: &ChartVector) -> Result<f64, SimError> {
    check_compatible(x, y)?;
    let sum: f64 = x
        .components()
        .iter()
        .zip(y.components())
        .map(|(a, b)| {
            let diff = a - b;
            diff * diff
        })
        .sum();
    let d = sum.sqrt();
    if !d.is_finite() {
        return Err(SimError::NonFiniteDistance(d));
    }
    Ok(d)
}

/// `d(x, y) = sum_i |x_i - y_i|`, the `r = 1` case computed without `powf`.
pub fn manhattan_distance(x: &ChartVector, y: &ChartVector) -> Result<f64, SimError> {
    check_compatible(x, y)?;
    let d: f64 = x
        .components()
        .iter()
        .zip(y.components())
        .map(|(a, b)| (a - b).abs())
        .sum();
    if !d.is_finite() {
        return Err(SimError::NonFiniteDistance(d));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scale::rescale;
    use approx::assert_relative_eq;

    fn vec_of(raw: &[f64]) -> ChartVector {
        rescale(raw, 1.0).unwrap()
    }

    #[test]
    fn order_below_one_is_rejected() {
        assert!(matches!(
            MetricSpec::new(0.5),
            Err(SimError::InvalidOrder(_))
        ));
        assert!(matches!(
            MetricSpec::new(0.0),
            Err(SimError::InvalidOrder(_))
        ));
        assert!(matches!(
            MetricSpec::new(f64::NAN),
            Err(SimError::InvalidOrder(_))
        ));
        assert!(matches!(
            MetricSpec::new(f64::INFINITY),
            Err(SimError::InvalidOrder(_))
        ));
        assert_eq!(MetricSpec::new(1.0).unwrap().order(), 1.0);
        assert_eq!(MetricSpec::default().order(), 2.0);
    }

    #[test]
    fn euclidean_distance_of_near_identical_vectors() {
        let x = vec_of(&[0.5, 1.0, 0.3]);
        let y = vec_of(&[0.567, 0.9, 0.31]);
        let d = euclidean_distance(&x, &y).unwrap();
        assert_relative_eq!(d, 0.120784932835184, max_relative = 1e-12);
    }

    #[test]
    fn euclidean_distance_of_distant_vectors() {
        let x = vec_of(&[0.5, 1.0, 0.3]);
        let y = vec_of(&[1.0, 0.5, 2.0]);
        let d = euclidean_distance(&x, &y).unwrap();
        assert_relative_eq!(d, 1.841195263952197, max_relative = 1e-12);
    }

    #[test]
    fn manhattan_distances_match_hand_sums() {
        let x = vec_of(&[0.5, 1.0, 0.3]);
        let y = vec_of(&[0.567, 0.9, 0.31]);
        assert_relative_eq!(
            manhattan_distance(&x, &y).unwrap(),
            0.177,
            max_relative = 1e-12
        );
        let z = vec_of(&[1.0, 0.5, 2.0]);
        assert_relative_eq!(
            manhattan_distance(&x, &z).unwrap(),
            2.7,
            max_relative = 1e-12
        );
    }

    #[test]
    fn generic_route_agrees_with_specialized_routes() {
        let x = vec_of(&[0.5, 1.0, 0.3]);
        let y = vec_of(&[0.567, 0.9, 0.31]);
        let g2 = minkowski_distance(&x, &y, MetricSpec::EUCLIDEAN).unwrap();
        assert_relative_eq!(
            g2,
            euclidean_distance(&x, &y).unwrap(),
            max_relative = 1e-12
        );
        let g1 = minkowski_distance(&x, &y, MetricSpec::MANHATTAN).unwrap();
        assert_relative_eq!(
            g1,
            manhattan_distance(&x, &y).unwrap(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn fractional_and_cubic_orders() {
        let x = vec_of(&[0.5, 1.0, 0.3]);
        let y = vec_of(&[0.567, 0.9, 0.31]);
        let d15 = minkowski_distance(&x, &y, MetricSpec::new(1.5).unwrap()).unwrap();
        assert_relative_eq!(d15, 0.135658073888388, max_relative = 1e-12);

        let z = vec_of(&[1.0, 0.5, 2.0]);
        let d3 = minkowski_distance(&x, &z, MetricSpec::new(3.0).unwrap()).unwrap();
        assert_relative_eq!(d3, 1.728359343135205, max_relative = 1e-12);
    }

    #[test]
    fn identical_vectors_have_zero_distance() {
        let x = vec_of(&[0.4, 0.4, 0.2]);
        assert_eq!(euclidean_distance(&x, &x).unwrap(), 0.0);
        assert_eq!(manhattan_distance(&x, &x).unwrap(), 0.0);
        assert_eq!(
            minkowski_distance(&x, &x, MetricSpec::new(1.5).unwrap()).unwrap(),
            0.0
        );
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let x = vec_of(&[1.0, 2.0]);
        let y = vec_of(&[1.0, 2.0, 3.0]);
        assert!(matches!(
            euclidean_distance(&x, &y),
            Err(SimError::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn scale_mismatch_is_rejected() {
        let x = rescale(&[500.0, 1000.0], 1000.0).unwrap();
        let y = rescale(&[500.0, 1000.0], 100.0).unwrap();
        assert!(matches!(
            minkowski_distance(&x, &y, MetricSpec::EUCLIDEAN),
            Err(SimError::ScaleMismatch { .. })
        ));
    }
}
