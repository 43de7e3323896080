//! Minimal native SVG charts: polylines on linear axes and bar histograms.
//!
//! Output depends only on the inputs (fixed number formatting, no
//! timestamps), so the same data always renders to the same bytes.

use std::fmt::Write;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 64.0;
const RIGHT: f64 = 210.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 52.0;
const PALETTE: [&str; 10] =
    ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"];

#[derive(Debug, Clone)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
    pub dashed: bool,
}

impl Series {
    pub fn new(name: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        Series { name: name.into(), points, dashed: false }
    }

    pub fn dashed(mut self) -> Self {
        self.dashed = true;
        self
    }
}

/// Axis-aligned data bounds, widened to whole tick steps, mapped onto the
/// plot area.
struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    x_step: f64,
    y_step: f64,
}

/// A round step (1, 2 or 5 times a power of ten) giving about five ticks.
fn nice_step(span: f64) -> f64 {
    let raw = span / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let unit = [1.0, 2.0, 5.0, 10.0].into_iter().find(|&u| u * mag >= raw).unwrap_or(10.0);
    unit * mag
}

fn ticks(lo: f64, hi: f64, step: f64) -> impl Iterator<Item = f64> {
    let first = (lo / step).round() as i64;
    let last = (hi / step).round() as i64;
    (first..=last).map(move |k| k as f64 * step)
}

impl Frame {
    fn fit(points: impl Iterator<Item = (f64, f64)>) -> Self {
        let mut f = Frame {
            x0: f64::INFINITY,
            x1: f64::NEG_INFINITY,
            y0: 0.0,
            y1: f64::NEG_INFINITY,
            x_step: 1.0,
            y_step: 1.0,
        };
        for (x, y) in points.filter(|(x, y)| x.is_finite() && y.is_finite()) {
            f.x0 = f.x0.min(x);
            f.x1 = f.x1.max(x);
            f.y0 = f.y0.min(y);
            f.y1 = f.y1.max(y);
        }
        if !f.x0.is_finite() {
            (f.x0, f.x1, f.y1) = (0.0, 1.0, 1.0);
        }
        if f.x1 <= f.x0 {
            f.x1 = f.x0 + 1.0;
        }
        if f.y1 <= f.y0 {
            f.y1 = f.y0 + 1.0;
        }
        f.x_step = nice_step(f.x1 - f.x0);
        f.y_step = nice_step(f.y1 - f.y0);
        f.x0 = (f.x0 / f.x_step).floor() * f.x_step;
        f.x1 = (f.x1 / f.x_step).ceil() * f.x_step;
        f.y0 = (f.y0 / f.y_step).floor() * f.y_step;
        f.y1 = (f.y1 / f.y_step).ceil() * f.y_step;
        f
    }

    fn px(&self, x: f64) -> f64 {
        LEFT + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - TOP - BOTTOM)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn tick_label(v: f64) -> String {
    if v.abs() >= 1e4 || (v != 0.0 && v.abs() < 1e-2) {
        format!("{v:.1e}")
    } else if (v - v.round()).abs() < 1e-9 {
        format!("{v:.0}")
    } else {
        format!("{v:.2}")
    }
}

fn open(svg: &mut String, title: &str, x_label: &str, y_label: &str, f: &Frame) {
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        (WIDTH - RIGHT + LEFT) / 2.0,
        escape(title)
    );
    let (left, right, top, bottom) = (LEFT, WIDTH - RIGHT, TOP, HEIGHT - BOTTOM);
    let _ = writeln!(svg, r#"<path d="M{left:.1},{top:.1} V{bottom:.1} H{right:.1}" fill="none" stroke="black"/>"#);
    for xv in ticks(f.x0, f.x1, f.x_step) {
        let x = f.px(xv);
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.1}" y1="{bottom:.1}" x2="{x:.1}" y2="{:.1}" stroke="black"/><text x="{x:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
            bottom + 5.0,
            bottom + 18.0,
            tick_label(xv)
        );
    }
    for yv in ticks(f.y0, f.y1, f.y_step) {
        let y = f.py(yv);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.1}" y1="{y:.1}" x2="{left:.1}" y2="{y:.1}" stroke="black"/><text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#,
            left - 5.0,
            left - 8.0,
            y + 4.0,
            tick_label(yv)
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
        (left + right) / 2.0,
        HEIGHT - 12.0,
        escape(x_label)
    );
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{:.1}" text-anchor="middle" transform="rotate(-90 16 {:.1})">{}</text>"#,
        (top + bottom) / 2.0,
        (top + bottom) / 2.0,
        escape(y_label)
    );
}

/// Polylines sharing one pair of axes, with a legend on the right.
pub fn line_chart(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let f = Frame::fit(series.iter().flat_map(|s| s.points.iter().copied()));
    let mut svg = String::new();
    open(&mut svg, title, x_label, y_label, &f);
    for (i, s) in series.iter().enumerate() {
        let color = if s.dashed { "black" } else { PALETTE[i % PALETTE.len()] };
        let dash = if s.dashed { r#" stroke-dasharray="6 4""# } else { "" };
        let points: Vec<String> = s
            .points
            .iter()
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .map(|&(x, y)| format!("{:.1},{:.1}", f.px(x), f.py(y)))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"{dash}/>"#,
            points.join(" ")
        );
        let ly = TOP + 14.0 + 16.0 * i as f64;
        let lx = WIDTH - RIGHT + 12.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{color}" stroke-width="1.5"{dash}/><text x="{:.1}" y="{:.1}">{}</text>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0,
            escape(&s.name)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Bars for `(lower edge, count)` bins of equal `bin_width`; the x axis
/// spans the nonempty bins only.
pub fn histogram(title: &str, x_label: &str, bins: &[(usize, usize)], bin_width: usize) -> String {
    let bin_width = bin_width.max(1);
    let f = Frame::fit(
        bins.iter()
            .filter(|&&(_, k)| k > 0)
            .flat_map(|&(lo, k)| [(lo as f64, k as f64), ((lo + bin_width) as f64, 0.0)]),
    );
    let mut svg = String::new();
    open(&mut svg, title, x_label, "count", &f);
    for &(lo, k) in bins.iter().filter(|&&(_, k)| k > 0) {
        let (x, x2) = (f.px(lo as f64), f.px((lo + bin_width) as f64));
        let (y, base) = (f.py(k as f64), f.py(0.0));
        let _ = writeln!(
            svg,
            r##"<rect x="{x:.1}" y="{y:.1}" width="{:.1}" height="{:.1}" fill="#1f77b4" stroke="white"/>"##,
            x2 - x,
            base - y
        );
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_chart_is_deterministic_svg() {
        let s = [
            Series::new("a", vec![(0.0, 3.0), (1.0, 1.0), (2.0, 0.0)]),
            Series::new("ref <ideal>", vec![(0.0, 3.0), (3.0, 0.0)]).dashed(),
        ];
        let a = line_chart("t", "x", "y", &s);
        assert_eq!(a, line_chart("t", "x", "y", &s));
        assert!(a.starts_with("<svg") && a.trim_end().ends_with("</svg>"));
        assert_eq!(a.matches("<polyline").count(), 2);
        assert!(a.contains("stroke-dasharray") && a.contains("ref &lt;ideal&gt;"));
    }

    #[test]
    fn histogram_draws_nonempty_bins() {
        let svg = histogram("h", "queries", &[(0, 0), (2, 5), (4, 1)], 2);
        assert_eq!(svg.matches("<rect x=").count(), 2);
    }

    #[test]
    fn ticks_are_round() {
        assert_eq!(nice_step(9.9), 2.0);
        assert_eq!(nice_step(14.0), 5.0);
        assert_eq!(nice_step(0.3), 0.1);
        assert_eq!(ticks(0.0, 10.0, 2.0).collect::<Vec<_>>(), vec![0.0, 2.0, 4.0, 6.0, 8.0, 10.0]);
    }

    #[test]
    fn degenerate_inputs_render() {
        assert!(line_chart("e", "x", "y", &[]).contains("</svg>"));
        assert!(line_chart("p", "x", "y", &[Series::new("one", vec![(1.0, 1.0)])]).contains("<polyline"));
        assert!(histogram("h", "x", &[], 2).contains("</svg>"));
    }
}
