//! Rescaling of raw chart vectors by a constant `c`.
//!
//! Dividing every component by the same constant preserves all proportions
//! while keeping the later `exp(-d)` numerically meaningful: distances on the
//! raw values of real charts (hundreds, thousands) would underflow the
//! exponential.

use crate::chart::StackedBarChart;
use crate::error::SimError;

/// How the scale constant `c` is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScaleSpec {
    /// Derive `c` from the data: `10^floor(log10(M))` for the maximum
    /// segment value `M`, so the largest component lands in `[1, 10)`.
    Auto,
    /// Use the given constant (must be positive and finite).
    Explicit(f64),
}

impl ScaleSpec {
    pub fn explicit(c: f64) -> Result<Self, SimError> {
        if !c.is_finite() || c <= 0.0 {
            return Err(SimError::NonPositiveScale(c));
        }
        Ok(ScaleSpec::Explicit(c))
    }
}

/// A chart's numeric vector after rescaling, carrying the constant that
/// produced it so mismatched scales can never be compared silently.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartVector {
    components: Vec<f64>,
    scale: f64,
}

impl ChartVector {
    pub fn components(&self) -> &[f64] {
        &self.components
    }

    /// The constant the raw values were divided by.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Picks the scale constant for a collection of charts:
/// `c = 10^floor(log10(M))` where `M` is the largest segment value anywhere
/// in the collection, or `c = 1` when every value is zero.
pub fn auto_scale<'a, I>(charts: I) -> Result<f64, SimError>
where
    I: IntoIterator<Item = &'a StackedBarChart>,
{
    let mut max = f64::NEG_INFINITY;
    let mut seen = false;
    for chart in charts {
        seen = true;
        for seg in chart.segments() {
            max = max.max(seg.value());
        }
    }
    if !seen {
        return Err(SimError::EmptyCollection);
    }
    if max <= 0.0 {
        Ok(1.0)
    } else {
        Ok(10f64.powi(max.log10().floor() as i32))
    }
}

/// Divides every raw value by `c`, one division per component.
pub fn rescale(raw: &[f64], c: f64) -> Result<ChartVector, SimError> {
    if !c.is_finite() || c <= 0.0 {
        return Err(SimError::NonPositiveScale(c));
    }
    if raw.is_empty() {
        return Err(SimError::EmptyVector);
    }
    for (index, &value) in raw.iter().enumerate() {
        if !value.is_finite() || value < 0.0 {
            return Err(SimError::InvalidComponent { index, value });
        }
    }
    Ok(ChartVector {
        components: raw.iter().map(|v| v / c).collect(),
        scale: c,
    })
}
