//! Phase portraits of a foliation pair as SVG 1.1.

use std::fmt::Write;

use saddlelink_core::foliation::{LinearField, PairParams};
use saddlelink_core::holonomy::{sector_frame_cc, sector_frame_rc, SectorFrame};
use saddlelink_core::linalg::{norm, Vec2};
use saddlelink_core::oracle::leaves::{trace_leaf, TRACE_STEP};
use saddlelink_core::oracle::tangency_directions;
use saddlelink_core::tangency::{tangency_lines_cc, tangency_lines_cr, tangency_lines_rc};
use saddlelink_core::{Error, Result};

const SIZE: f64 = 600.0;
const MAX_POINTS: usize = 20_000;
/// Polyline points closer than this many pixels are merged.
const MIN_GAP: f64 = 0.75;

#[derive(Clone, Copy, Debug)]
pub struct RenderScene {
    pub pair: PairParams,
    /// Half-width of the square viewport.
    pub radius: f64,
    /// Leaves per foliation.
    pub leaves: usize,
    pub shade_sector: bool,
}

impl RenderScene {
    pub fn new(pair: PairParams, radius: f64, leaves: usize) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Domain("radius must be positive"));
        }
        if leaves == 0 {
            return Err(Error::Domain("at least one leaf per foliation"));
        }
        Ok(RenderScene { pair, radius, leaves, shade_sector: false })
    }

    fn px(&self, p: Vec2) -> (f64, f64) {
        let k = SIZE / 2.0 / self.radius;
        (SIZE / 2.0 + p[0] * k, SIZE / 2.0 - p[1] * k)
    }

    /// Tangency directions of the pair, in `[0, π)`.
    pub fn tangency_angles(&self) -> Result<Vec<f64>> {
        Ok(match self.pair {
            PairParams::Cc { alpha, beta, lambda } => tangency_lines_cc(alpha, beta, lambda)?.angles,
            PairParams::Rc { beta, mu, lambda, theta0 } => tangency_lines_rc(beta, mu, lambda, theta0)?.angles,
            PairParams::Cr { alpha, gamma, lambda, theta1 } => tangency_lines_cr(alpha, gamma, lambda, theta1)?.angles,
            PairParams::Rr { .. } => {
                let (f, g) = self.pair.fields()?;
                match tangency_directions(&f, &g, 4096) {
                    Ok(lines) => lines,
                    Err(Error::InconclusiveNearBoundary) => Vec::new(),
                    Err(e) => return Err(e),
                }
            }
        })
    }

    fn sector(&self) -> Option<SectorFrame> {
        match self.pair {
            PairParams::Cc { alpha, beta, lambda } => sector_frame_cc(alpha, beta, lambda).ok(),
            PairParams::Rc { beta, mu, lambda, theta0 } => sector_frame_rc(beta, mu, lambda, theta0).ok(),
            PairParams::Cr { alpha, gamma, lambda, theta1 } => {
                sector_frame_rc(alpha, gamma, 1.0 / lambda, -theta1).ok()
            }
            PairParams::Rr { .. } => None,
        }
    }

    /// Seeds spaced evenly along the boundary of the viewport.
    fn seeds(&self, offset: f64) -> Vec<Vec2> {
        let w = self.radius;
        let n = self.leaves;
        (0..n)
            .map(|i| {
                let u = 8.0 * w * ((i as f64 + offset) / n as f64);
                match (u / (2.0 * w)) as usize {
                    0 => [-w + u, -w],
                    1 => [w, -w + (u - 2.0 * w)],
                    2 => [w - (u - 4.0 * w), w],
                    _ => [-w, w - (u - 6.0 * w)],
                }
            })
            .collect()
    }

    fn polyline(&self, field: &LinearField, seed: Vec2) -> String {
        let w = self.radius;
        let inner = w * 1e-3;
        let keep = |p: Vec2| p[0].abs() <= w && p[1].abs() <= w && norm(p) > inner;
        // nudge inward so the seed itself is inside
        let seed = [seed[0] * 0.999, seed[1] * 0.999];
        let leaf = trace_leaf(field, seed, keep, TRACE_STEP, MAX_POINTS);
        let mut out = String::new();
        let mut last: Option<(f64, f64)> = None;
        for (i, p) in leaf.iter().enumerate() {
            let (x, y) = self.px(*p);
            if !x.is_finite() || !y.is_finite() {
                continue;
            }
            if let Some((lx, ly)) = last {
                let end = i + 1 == leaf.len();
                if !end && (x - lx).hypot(y - ly) < MIN_GAP {
                    continue;
                }
            }
            if last.is_some() {
                out.push(' ');
            }
            let _ = write!(out, "{x:.2},{y:.2}");
            last = Some((x, y));
        }
        out
    }

    /// The SVG document; identical inputs give identical bytes.
    pub fn render(&self) -> Result<String> {
        let (f, g) = self.pair.fields()?;
        let lines = self.tangency_angles()?;
        let mut svg = String::new();
        let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        );
        let _ = writeln!(svg, "<title>{} foliation pair</title>", self.pair.subset().as_str());
        let _ = writeln!(svg, r##"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>"##);

        if self.shade_sector {
            if let Some(frame) = self.sector() {
                let steps = 32;
                let reach = self.radius * 2f64.sqrt();
                let mut d = String::from("M300.00,300.00");
                for i in 0..=steps {
                    let a = frame.delta + frame.travel * i as f64 / steps as f64;
                    let (x, y) = self.px([reach * a.cos(), reach * a.sin()]);
                    let _ = write!(d, " L{x:.2},{y:.2}");
                }
                d.push_str(" Z");
                let _ = writeln!(svg, r##"<path class="sector" d="{d}" fill="#f3e3b0" stroke="none"/>"##);
            }
        }

        let groups = [("leaves-p", "#1f5fa8", &f, 0.5), ("leaves-q", "#b8321f", &g, 0.25)];
        for (class, colour, field, offset) in groups {
            let _ = writeln!(svg, r#"<g class="{class}" fill="none" stroke="{colour}" stroke-width="1">"#);
            for seed in self.seeds(offset) {
                let points = self.polyline(field, seed);
                if !points.is_empty() {
                    let _ = writeln!(svg, r#"<polyline points="{points}"/>"#);
                }
            }
            let _ = writeln!(svg, "</g>");
        }

        let _ = writeln!(svg, r##"<g class="tangency" stroke="#000000" stroke-width="1.5">"##);
        for a in &lines {
            let (c, s) = (a.cos(), a.sin());
            let reach = self.radius / c.abs().max(s.abs());
            let (x1, y1) = self.px([-reach * c, -reach * s]);
            let (x2, y2) = self.px([reach * c, reach * s]);
            let _ =
                writeln!(svg, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke-dasharray="8 5"/>"#);
        }
        let _ = writeln!(svg, "</g>");
        let _ = writeln!(svg, r##"<circle class="origin" cx="300.00" cy="300.00" r="3" fill="#000000"/>"##);
        svg.push_str("</svg>\n");
        Ok(svg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dashed(svg: &str) -> Vec<(f64, f64, f64, f64)> {
        svg.lines()
            .filter(|l| l.contains("stroke-dasharray"))
            .map(|l| {
                let get = |key: &str| -> f64 {
                    let start = l.find(&format!(" {key}=\"")).unwrap() + key.len() + 3;
                    let end = start + l[start..].find('"').unwrap();
                    l[start..end].parse().unwrap()
                };
                (get("x1"), get("y1"), get("x2"), get("y2"))
            })
            .collect()
    }

    #[test]
    fn cc_pair_has_two_tangency_lines() {
        let scene = RenderScene::new(PairParams::Cc { alpha: 1.0, beta: -1.0, lambda: 6.0 }, 1.0, 8).unwrap();
        let svg = scene.render().unwrap();
        let lines = dashed(&svg);
        assert_eq!(lines.len(), 2);
        let mut slopes: Vec<f64> = lines.iter().map(|(x1, y1, x2, y2)| -(y2 - y1) / (x2 - x1)).collect();
        slopes.sort_by(f64::total_cmp);
        assert!((slopes[0] - 2.0).abs() < 0.02 && (slopes[1] - 3.0).abs() < 0.02, "{slopes:?}");
        assert_eq!(svg.matches("<polyline").count(), 16);
    }

    #[test]
    fn tt_pair_has_none() {
        let scene = RenderScene::new(PairParams::Cc { alpha: 1.0, beta: -1.0, lambda: 2.0 }, 1.0, 4).unwrap();
        assert!(dashed(&scene.render().unwrap()).is_empty());
    }

    #[test]
    fn rejects_empty_scenes() {
        let pair = PairParams::Cc { alpha: 1.0, beta: -1.0, lambda: 2.0 };
        assert!(RenderScene::new(pair, 1.0, 0).is_err());
        assert!(RenderScene::new(pair, 0.0, 3).is_err());
    }

    #[test]
    fn deterministic() {
        let mut scene =
            RenderScene::new(PairParams::Rc { beta: 1.0, mu: 0.4, lambda: 5.0, theta0: 0.7 }, 2.0, 6).unwrap();
        scene.shade_sector = true;
        assert_eq!(scene.render().unwrap(), scene.render().unwrap());
    }
}
