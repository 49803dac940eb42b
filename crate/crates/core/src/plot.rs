//! Static SVG rendering: a cluster scatter of one deployment and a line
//! chart over CSV columns.
//!
//! Output is assembled as plain text in a fixed order with fixed-precision
//! coordinates, so identical inputs produce identical bytes. No styling is
//! configurable; these are result displays, not a charting library.

use std::fmt::Write as _;

use crate::clustering::ClusterAssignment;
use crate::error::{Error, Result};
use crate::network::Deployment;

const MEMBER_RADIUS: f64 = 2.5;
const HEAD_RADIUS: f64 = 5.0;
const SINK_HALF_SIDE: f64 = 5.0;
const PALETTE: [&str; 5] = ["#1b6ca8", "#d1495b", "#3a7d44", "#8d5a97", "#c77d1a"];

/// Scatter of one clustering: sink as a filled black square, members as
/// small circles, heads as larger circles, dead nodes hollow. With
/// `draw_links`, a line connects each member to its head.
pub fn cluster_svg(
    deployment: &Deployment,
    assignment: &ClusterAssignment,
    draw_links: bool,
) -> String {
    let (x0, x1) = deployment.config.x_range();
    let (y0, y1) = deployment.config.y_range();
    let sink = deployment.sink();
    let x_min = x0.min(sink.x);
    let x_max = x1.max(sink.x);
    let y_min = y0.min(sink.y);
    let y_max = y1.max(sink.y);

    let margin = 24.0;
    let inner_w = 600.0;
    let inner_h = inner_w * (y_max - y_min) / (x_max - x_min);
    let width = inner_w + 2.0 * margin;
    let height = inner_h + 2.0 * margin;
    // SVG y grows downward; field y grows upward.
    let px = |x: f64| margin + (x - x_min) / (x_max - x_min) * inner_w;
    let py = |y: f64| margin + (y_max - y) / (y_max - y_min) * inner_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"##
    );
    let _ = writeln!(
        svg,
        r##"<rect x="0" y="0" width="{width:.0}" height="{height:.0}" fill="white"/>"##
    );
    let _ = writeln!(
        svg,
        r##"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#999999"/>"##,
        px(x0),
        py(y1),
        px(x1) - px(x0),
        py(y0) - py(y1),
    );
    if draw_links {
        // member_head is None for heads and the dead, so this walks exactly
        // the living members.
        for node in &deployment.nodes {
            if let Some(head) = assignment.member_head(node.id) {
                let h = deployment.nodes[head].position;
                let _ = writeln!(
                    svg,
                    r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#bbccdd" stroke-width="0.6"/>"##,
                    px(node.position.x),
                    py(node.position.y),
                    px(h.x),
                    py(h.y),
                );
            }
        }
    }
    for node in &deployment.nodes {
        let (cx, cy) = (px(node.position.x), py(node.position.y));
        if !node.alive {
            let _ = writeln!(
                svg,
                r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="{MEMBER_RADIUS}" fill="none" stroke="#bbbbbb"/>"##
            );
        } else if assignment.is_head(node.id) {
            let _ = writeln!(
                svg,
                r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="{HEAD_RADIUS}" fill="#d1495b" stroke="#7a1e2b"/>"##
            );
        } else {
            let _ = writeln!(
                svg,
                r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="{MEMBER_RADIUS}" fill="#1b6ca8"/>"##
            );
        }
    }
    let _ = writeln!(
        svg,
        r##"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="black"/>"##,
        px(sink.x) - SINK_HALF_SIDE,
        py(sink.y) - SINK_HALF_SIDE,
        2.0 * SINK_HALF_SIDE,
        2.0 * SINK_HALF_SIDE,
    );
    svg.push_str("</svg>\n");
    svg
}

/// One named curve.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
}

/// Line chart of one or more series sharing the x axis.
pub fn line_chart_svg(title: &str, x_label: &str, series: &[Series]) -> Result<String> {
    let finite: Vec<(f64, f64)> = series
        .iter()
        .flat_map(|s| s.points.iter().copied())
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .collect();
    if series.is_empty() || finite.is_empty() {
        return Err(Error::InvalidConfig("nothing to plot".into()));
    }
    let (mut x_min, mut x_max) = span(finite.iter().map(|p| p.0));
    let (mut y_min, mut y_max) = span(finite.iter().map(|p| p.1));
    pad_degenerate(&mut x_min, &mut x_max);
    pad_degenerate(&mut y_min, &mut y_max);

    let (width, height) = (720.0, 440.0);
    let (left, right, top, bottom) = (80.0, 160.0, 44.0, 56.0);
    let inner_w = width - left - right;
    let inner_h = height - top - bottom;
    let px = |x: f64| left + (x - x_min) / (x_max - x_min) * inner_w;
    let py = |y: f64| top + (y_max - y) / (y_max - y_min) * inner_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif">"##
    );
    let _ = writeln!(
        svg,
        r##"<rect x="0" y="0" width="{width:.0}" height="{height:.0}" fill="white"/>"##
    );
    let _ = writeln!(
        svg,
        r##"<text x="{:.2}" y="26" text-anchor="middle" font-size="16">{}</text>"##,
        left + inner_w / 2.0,
        escape(title),
    );

    let ticks = 5;
    for i in 0..ticks {
        let t = i as f64 / (ticks - 1) as f64;
        let xv = x_min + t * (x_max - x_min);
        let yv = y_min + t * (y_max - y_min);
        let (gx, gy) = (px(xv), py(yv));
        let _ = writeln!(
            svg,
            r##"<line x1="{gx:.2}" y1="{top:.2}" x2="{gx:.2}" y2="{:.2}" stroke="#eeeeee"/>"##,
            top + inner_h
        );
        let _ = writeln!(
            svg,
            r##"<line x1="{left:.2}" y1="{gy:.2}" x2="{:.2}" y2="{gy:.2}" stroke="#eeeeee"/>"##,
            left + inner_w
        );
        let _ = writeln!(
            svg,
            r##"<text x="{gx:.2}" y="{:.2}" text-anchor="middle" font-size="11">{}</text>"##,
            top + inner_h + 18.0,
            tick_label(xv),
        );
        let _ = writeln!(
            svg,
            r##"<text x="{:.2}" y="{:.2}" text-anchor="end" font-size="11">{}</text>"##,
            left - 8.0,
            gy + 4.0,
            tick_label(yv),
        );
    }
    let _ = writeln!(
        svg,
        r##"<rect x="{left:.2}" y="{top:.2}" width="{inner_w:.2}" height="{inner_h:.2}" fill="none" stroke="#333333"/>"##
    );
    let _ = writeln!(
        svg,
        r##"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="12">{}</text>"##,
        left + inner_w / 2.0,
        height - 14.0,
        escape(x_label),
    );

    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut path = String::new();
        for &(x, y) in &s.points {
            if !(x.is_finite() && y.is_finite()) {
                continue;
            }
            let _ = write!(path, "{:.2},{:.2} ", px(x), py(y));
        }
        let _ = writeln!(
            svg,
            r##"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"##,
            path.trim_end(),
        );
        let ly = top + 14.0 + 18.0 * i as f64;
        let _ = writeln!(
            svg,
            r##"<line x1="{:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/>"##,
            left + inner_w + 12.0,
            left + inner_w + 36.0,
        );
        let _ = writeln!(
            svg,
            r##"<text x="{:.2}" y="{:.2}" font-size="12">{}</text>"##,
            left + inner_w + 42.0,
            ly + 4.0,
            escape(&s.name),
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn span(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

fn pad_degenerate(min: &mut f64, max: &mut f64) {
    if *min == *max {
        let pad = if *min == 0.0 { 0.5 } else { min.abs() * 0.05 };
        *min -= pad;
        *max += pad;
    }
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let magnitude = v.abs();
    if !(1e-3..1e5).contains(&magnitude) {
        return format!("{v:.2e}");
    }
    let mut s = format!("{v:.3}");
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
