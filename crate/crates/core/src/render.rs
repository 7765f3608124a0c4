//! Side-by-side SVG rendering of a chart pair, so a computed score can be
//! checked against what the eye sees.
//!
//! Both bars share one value axis spanning `[0, max bar total]`; per-bar
//! normalization would hide exactly the magnitude differences a low score is
//! often about. The output sticks to `rect`, `text`, and `line` elements and
//! is byte-deterministic for identical inputs.

use thiserror::Error;

use crate::chart::{ChartPair, StackedBarChart};
use crate::compare::ComparisonResult;
use crate::io::{format_report, ReportTriple};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RenderError {
    #[error("canvas {width}x{height} is below the 64x64 minimum")]
    CanvasTooSmall { width: u32, height: u32 },

    #[error("palette has no colors")]
    EmptyPalette,
}

/// Canvas geometry and styling for [`render_pair`].
#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    /// Canvas width in pixels, at least 64.
    pub width: u32,
    /// Canvas height in pixels, at least 64.
    pub height: u32,
    /// Segment fill colors, cycled when a chart has more segments.
    pub palette: Vec<String>,
    /// Print each segment's value inside its rectangle.
    pub show_values: bool,
    /// Decimal places of `s` in the caption.
    pub precision: usize,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 640,
            height: 480,
            palette: [
                "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc949", "#b07aa1",
                "#9c755f",
            ]
            .iter()
            .map(|c| c.to_string())
            .collect(),
            show_values: false,
            precision: 2,
        }
    }
}

fn escape_xml(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

struct Frame {
    plot_left: f64,
    plot_right: f64,
    plot_top: f64,
    baseline: f64,
}

impl Frame {
    fn of(width: u32, height: u32) -> Frame {
        let (w, h) = (f64::from(width), f64::from(height));
        Frame {
            plot_left: 0.10 * w,
            plot_right: 0.96 * w,
            plot_top: 0.12 * h,
            baseline: 0.88 * h,
        }
    }

    fn plot_height(&self) -> f64 {
        self.baseline - self.plot_top
    }

    fn bar_geometry(&self, slot: usize) -> (f64, f64) {
        let plot_width = self.plot_right - self.plot_left;
        let bar_width = 0.22 * plot_width;
        let center = self.plot_left + plot_width * (slot as f64 + 1.0) / 3.0;
        (center - bar_width / 2.0, bar_width)
    }
}

fn push_bar(
    out: &mut String,
    chart: &StackedBarChart,
    frame: &Frame,
    slot: usize,
    unit: f64,
    spec: &RenderSpec,
) {
    let (x, bar_width) = frame.bar_geometry(slot);
    let mut cumulative = 0.0;
    for (i, seg) in chart.segments().iter().enumerate() {
        let height = seg.value() * unit;
        let y = frame.baseline - (cumulative + seg.value()) * unit;
        let fill = escape_xml(&spec.palette[i % spec.palette.len()]);
        out.push_str(&format!(
            "  <rect class=\"segment\" x=\"{x:.2}\" y=\"{y:.2}\" width=\"{bar_width:.2}\" height=\"{height:.2}\" fill=\"{fill}\"/>\n"
        ));
        if spec.show_values {
            let label_y = y + height / 2.0 + 4.0;
            let label_x = x + bar_width / 2.0;
            out.push_str(&format!(
                "  <text x=\"{label_x:.2}\" y=\"{label_y:.2}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
                seg.value()
            ));
        }
        cumulative += seg.value();
    }
    let name_x = x + bar_width / 2.0;
    let name_y = frame.baseline + 16.0;
    out.push_str(&format!(
        "  <text x=\"{name_x:.2}\" y=\"{name_y:.2}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
        escape_xml(chart.name())
    ));
}

/// Draws the two charts as stacked bars over a shared `[0, max total]` value
/// axis and embeds the report triple as a caption. Rectangle heights stay
/// proportional to segment values to within the 0.01 px the coordinate
/// formatting allows.
pub fn render_pair(
    pair: &ChartPair,
    result: &ComparisonResult,
    spec: &RenderSpec,
) -> Result<String, RenderError> {
    if spec.width < 64 || spec.height < 64 {
        return Err(RenderError::CanvasTooSmall {
            width: spec.width,
            height: spec.height,
        });
    }
    if spec.palette.is_empty() {
        return Err(RenderError::EmptyPalette);
    }

    let frame = Frame::of(spec.width, spec.height);
    let max_total = pair.left().total().max(pair.right().total());
    let unit = if max_total > 0.0 {
        frame.plot_height() / max_total
    } else {
        0.0
    };

    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
        w = spec.width,
        h = spec.height
    );

    // Value axis with its two extreme labels, then the shared baseline.
    out.push_str(&format!(
        "  <line x1=\"{x:.2}\" y1=\"{top:.2}\" x2=\"{x:.2}\" y2=\"{base:.2}\" stroke=\"#333333\"/>\n",
        x = frame.plot_left,
        top = frame.plot_top,
        base = frame.baseline
    ));
    out.push_str(&format!(
        "  <line x1=\"{left:.2}\" y1=\"{base:.2}\" x2=\"{right:.2}\" y2=\"{base:.2}\" stroke=\"#333333\"/>\n",
        left = frame.plot_left,
        base = frame.baseline,
        right = frame.plot_right
    ));
    let tick_x = frame.plot_left - 4.0;
    out.push_str(&format!(
        "  <text x=\"{tick_x:.2}\" y=\"{y:.2}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">0</text>\n",
        y = frame.baseline + 4.0
    ));
    out.push_str(&format!(
        "  <text x=\"{tick_x:.2}\" y=\"{y:.2}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{max_total}</text>\n",
        y = frame.plot_top + 4.0
    ));

    push_bar(&mut out, pair.left(), &frame, 0, unit, spec);
    push_bar(&mut out, pair.right(), &frame, 1, unit, spec);

    let triple = ReportTriple::from_result(result, spec.precision);
    out.push_str(&format!(
        "  <text id=\"caption\" x=\"{x:.2}\" y=\"{y:.2}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
        format_report(&triple),
        x = f64::from(spec.width) / 2.0,
        y = 0.06 * f64::from(spec.height)
    ));
    out.push_str("</svg>\n");
    Ok(out)
}
