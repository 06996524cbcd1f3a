// Copyright 2026 the compass authors
// SPDX-License-Identifier: Apache-2.0

//! SVG diagrams of construction traces.

use std::fmt::Write as _;

use crate::construct::{ConstructionTrace, Object};
use crate::error::{Error, Result};
use crate::geom::{Line, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderConfig {
    pub width: u32,
    pub height: u32,
    pub margin: u32,
    pub digits: u32,
    pub labels: bool,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            width: 640,
            height: 640,
            margin: 80,
            digits: 4,
            labels: true,
        }
    }
}

impl RenderConfig {
    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidArgument("render size must be positive".into()));
        }
        if 2 * self.margin >= self.width.min(self.height) {
            return Err(Error::InvalidArgument("margin leaves no room for the drawing".into()));
        }
        if self.digits == 0 {
            return Err(Error::InvalidArgument("digits must be at least 1".into()));
        }
        Ok(())
    }
}

/// Helper points of a mediatrix carry labels starting with `m` and are
/// drawn without a label.
fn auxiliary(label: &str) -> bool {
    label.starts_with('m')
}

/// Unit circle label used by the polygon programs.
const UNIT: &str = "Γ";

struct Canvas {
    out: String,
    digits: u32,
    /// Half extent of the visible window in world units.
    ex: f64,
    ey: f64,
    px: f64,
}

impl Canvas {
    fn num(&self, v: f64) -> String {
        let s = format!("{:.*}", self.digits as usize, v);
        if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
            s[1..].to_owned()
        } else {
            s
        }
    }

    fn coords(&self, p: &Point) -> (String, String) {
        let y = p.y.approx(self.digits);
        let flipped = match y.strip_prefix('-') {
            Some(pos) => pos.to_owned(),
            None if y.chars().all(|c| c == '0' || c == '.') => y,
            None => format!("-{y}"),
        };
        (p.x.approx(self.digits), flipped)
    }

    /// Clips an infinite line to the window, in flipped coordinates.
    fn line_segment(&self, l: &Line) -> Option<[(f64, f64); 2]> {
        let (p, q) = l.points();
        let (x0, y0) = (p.x.to_f64(), -p.y.to_f64());
        let (dx, dy) = (q.x.to_f64() - x0, -q.y.to_f64() - y0);
        let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
        for (d, lo, hi, o) in [(dx, -self.ex, self.ex, x0), (dy, -self.ey, self.ey, y0)] {
            if d.abs() < 1e-15 {
                if o < lo || o > hi {
                    return None;
                }
                continue;
            }
            let (a, b) = ((lo - o) / d, (hi - o) / d);
            t0 = t0.max(a.min(b));
            t1 = t1.min(a.max(b));
        }
        (t0 < t1).then_some([(x0 + t0 * dx, y0 + t0 * dy), (x0 + t1 * dx, y0 + t1 * dy)])
    }
}

/// Deterministic SVG of every line, circle and point bound in `trace`.
pub fn render_svg(trace: &ConstructionTrace, cfg: &RenderConfig) -> Result<String> {
    cfg.validate()?;
    let short = f64::from(cfg.width.min(cfg.height));
    let px = short / 2.0 - f64::from(cfg.margin);
    let mut c = Canvas {
        out: String::new(),
        digits: cfg.digits,
        ex: f64::from(cfg.width) / 2.0 / px,
        ey: f64::from(cfg.height) / 2.0 / px,
        px,
    };
    let (w, h) = (2.0 * c.ex, 2.0 * c.ey);
    let stroke = c.num(1.5 / c.px);
    let _ = writeln!(c.out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        c.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        cfg.width,
        cfg.height,
        c.num(-c.ex),
        c.num(-c.ey),
        c.num(w),
        c.num(h)
    );
    let _ = writeln!(
        c.out,
        "  <style>.construction{{stroke:#777;fill:none}} .unit{{stroke:#000;fill:none}} \
         .line{{stroke:#36c}} .point{{fill:#c33}} .aux{{fill:#999}} \
         text{{font-family:serif;font-size:{}px}}</style>",
        c.num(14.0 / c.px)
    );
    let _ = writeln!(
        c.out,
        r#"  <rect class="frame" x="{}" y="{}" width="{}" height="{}" fill="white" stroke="none"/>"#,
        c.num(-c.ex),
        c.num(-c.ey),
        c.num(w),
        c.num(h)
    );

    for (label, obj) in trace.bindings() {
        match obj {
            Object::Circle(k) => {
                let (cx, cy) = c.coords(k.center());
                let r = k.radius().approx(c.digits);
                let class = if label == UNIT { "unit" } else { "construction" };
                let _ = writeln!(
                    c.out,
                    r#"  <circle class="{class}" data-label="{}" cx="{cx}" cy="{cy}" r="{r}" stroke-width="{stroke}"/>"#,
                    escape(label)
                );
            }
            Object::Line(l) => {
                if let Some([(x1, y1), (x2, y2)]) = c.line_segment(l) {
                    let _ = writeln!(
                        c.out,
                        r#"  <line class="line" data-label="{}" x1="{}" y1="{}" x2="{}" y2="{}" stroke-width="{stroke}"/>"#,
                        escape(label),
                        c.num(x1),
                        c.num(y1),
                        c.num(x2),
                        c.num(y2)
                    );
                }
            }
            _ => {}
        }
    }

    let dot = c.num(3.0 / c.px);
    let aux_dot = c.num(2.0 / c.px);
    let offset = 6.0 / c.px;
    for (label, obj) in trace.bindings() {
        let Object::Point(p) = obj else { continue };
        let (x, y) = c.coords(p);
        if auxiliary(label) {
            let _ = writeln!(c.out, r#"  <circle class="aux" cx="{x}" cy="{y}" r="{aux_dot}"/>"#);
            continue;
        }
        let _ = writeln!(
            c.out,
            r#"  <circle class="point" data-label="{}" cx="{x}" cy="{y}" r="{dot}"/>"#,
            escape(label)
        );
        if cfg.labels {
            let tx = c.num(x.parse::<f64>().unwrap_or(0.0) + offset);
            let ty = c.num(y.parse::<f64>().unwrap_or(0.0) - offset);
            let _ = writeln!(c.out, r#"  <text x="{tx}" y="{ty}">{}</text>"#, escape(label));
        }
    }
    let _ = writeln!(c.out, "</svg>");
    Ok(c.out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}
