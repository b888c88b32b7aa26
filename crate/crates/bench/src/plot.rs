//! Convergence curves and their SVG rendering.

use std::fmt::Write;
use std::fs;
use std::path::Path;

use symtour::CrossoverKind;

use crate::error::BenchError;
use crate::experiment::OperatorRuns;
use crate::stats::{mean, t_half_width};

/// Mean best-so-far length per generation across runs, with the half-width
/// of its confidence interval when there are at least two runs.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub crossover: CrossoverKind,
    pub mean: Vec<f64>,
    pub half_width: Option<Vec<f64>>,
}

pub fn convergence_curves(operators: &[OperatorRuns], confidence: f64) -> Vec<Curve> {
    operators
        .iter()
        .filter(|op| !op.runs.is_empty())
        .map(|op| {
            let generations = op
                .runs
                .iter()
                .map(|r| r.per_generation.len())
                .min()
                .unwrap_or(0);
            let column = |g: usize| -> Vec<f64> {
                op.runs
                    .iter()
                    .map(|r| r.per_generation[g].best_length)
                    .collect()
            };
            let mean = (0..generations).map(|g| mean(&column(g))).collect();
            let half_width = (op.runs.len() >= 2).then(|| {
                (0..generations)
                    .map(|g| t_half_width(&column(g), confidence).unwrap_or(0.0))
                    .collect()
            });
            Curve {
                crossover: op.crossover,
                mean,
                half_width,
            }
        })
        .collect()
}

fn color(kind: CrossoverKind) -> &'static str {
    match kind {
        CrossoverKind::OnePoint => "#7f7f7f",
        CrossoverKind::Ox => "#9467bd",
        CrossoverKind::Box => "#1f77b4",
        CrossoverKind::Csx => "#2ca02c",
        CrossoverKind::Rx => "#ff7f0e",
        CrossoverKind::Csrx => "#d62728",
    }
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 130.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;

struct Frame {
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn x(&self, g: f64) -> f64 {
        LEFT + g / self.x_max * (WIDTH - LEFT - RIGHT)
    }

    fn y(&self, v: f64) -> f64 {
        TOP + (self.y_max - v) / (self.y_max - self.y_min) * (HEIGHT - TOP - BOTTOM)
    }
}

fn points<'a>(frame: &'a Frame, values: impl Iterator<Item = (usize, f64)> + 'a) -> String {
    values
        .map(|(g, v)| format!("{:.2},{:.2}", frame.x(g as f64), frame.y(v)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A standalone SVG document: one line per curve, shaded confidence bands.
pub fn render_svg(curves: &[Curve], title: &str) -> String {
    let bounds = |c: &Curve| -> Vec<(f64, f64)> {
        c.mean
            .iter()
            .enumerate()
            .map(|(g, &m)| {
                let h = c.half_width.as_ref().map_or(0.0, |hw| hw[g]);
                (m - h, m + h)
            })
            .collect()
    };
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for c in curves {
        for (a, b) in bounds(c) {
            lo = lo.min(a);
            hi = hi.max(b);
        }
    }
    if !lo.is_finite() {
        (lo, hi) = (0.0, 1.0);
    }
    let pad = ((hi - lo) * 0.05).max(1.0);
    let generations = curves.iter().map(|c| c.mean.len()).max().unwrap_or(1);
    let frame = Frame {
        x_max: (generations.saturating_sub(1)).max(1) as f64,
        y_min: lo - pad,
        y_max: hi + pad,
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="22" text-anchor="middle" font-size="15">{}</text>"#,
        (LEFT + WIDTH - RIGHT) / 2.0,
        escape(title)
    );

    let (x0, x1, y0, y1) = (LEFT, WIDTH - RIGHT, TOP, HEIGHT - BOTTOM);
    let _ = writeln!(
        svg,
        r#"<rect x="{x0}" y="{y0}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        x1 - x0,
        y1 - y0
    );
    for i in 0..=5 {
        let g = frame.x_max * i as f64 / 5.0;
        let x = frame.x(g);
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.2}" y1="{y1}" x2="{x:.2}" y2="{}" stroke="black"/><text x="{x:.2}" y="{}" text-anchor="middle">{g:.0}</text>"#,
            y1 + 5.0,
            y1 + 20.0
        );
        let v = frame.y_min + (frame.y_max - frame.y_min) * i as f64 / 5.0;
        let y = frame.y(v);
        let _ = writeln!(
            svg,
            r##"<line x1="{}" y1="{y:.2}" x2="{x0}" y2="{y:.2}" stroke="black"/><line x1="{x0}" y1="{y:.2}" x2="{x1}" y2="{y:.2}" stroke="#dddddd"/><text x="{}" y="{:.2}" text-anchor="end">{v:.0}</text>"##,
            x0 - 5.0,
            x0 - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">generation</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 10.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="18" y="{0}" text-anchor="middle" transform="rotate(-90 18 {0})">best tour length</text>"#,
        (y0 + y1) / 2.0
    );

    for c in curves {
        let col = color(c.crossover);
        if let Some(hw) = &c.half_width {
            let upper = c.mean.iter().zip(hw).map(|(m, h)| m + h).enumerate();
            let lower = c.mean.iter().zip(hw).map(|(m, h)| m - h).enumerate().rev();
            let _ = writeln!(
                svg,
                r#"<polygon points="{} {}" fill="{col}" fill-opacity="0.2" stroke="none"/>"#,
                points(&frame, upper),
                points(&frame, lower)
            );
        }
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{col}" stroke-width="1.5"/>"#,
            points(&frame, c.mean.iter().copied().enumerate())
        );
    }
    for (i, c) in curves.iter().enumerate() {
        let y = TOP + 10.0 + 20.0 * i as f64;
        let _ = writeln!(
            svg,
            r#"<line x1="{0}" y1="{y}" x2="{1}" y2="{y}" stroke="{2}" stroke-width="3"/><text x="{3}" y="{4}">{5}</text>"#,
            x1 + 15.0,
            x1 + 40.0,
            color(c.crossover),
            x1 + 48.0,
            y + 4.0,
            c.crossover
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Writes the convergence plot to `path`. Returns a warning for every
/// operator with fewer than two runs, which is drawn without a band.
pub fn emit_convergence_plot(
    instance: &str,
    operators: &[OperatorRuns],
    confidence: f64,
    path: &Path,
) -> Result<Vec<String>, BenchError> {
    let curves = convergence_curves(operators, confidence);
    let warnings = curves
        .iter()
        .filter(|c| c.half_width.is_none())
        .map(|c| {
            format!(
                "{}: fewer than 2 runs, no confidence band drawn",
                c.crossover
            )
        })
        .collect();
    let title = format!(
        "{instance}: mean best length, {:.0}% confidence band",
        confidence * 100.0
    );
    fs::write(path, render_svg(&curves, &title)).map_err(|source| BenchError::Write {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(warnings)
}
