//! Minimal scatter plots as standalone SVG.

use std::fmt::Write as _;

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

pub struct Plot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub log_x: bool,
    pub log_y: bool,
    pub series: Vec<Series>,
}

const W: f64 = 640.0;
const H: f64 = 440.0;
const MARGIN: (f64, f64, f64, f64) = (70.0, 20.0, 40.0, 60.0); // left right top bottom
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

struct Axis {
    lo: f64,
    hi: f64,
    log: bool,
}

impl Axis {
    fn new(values: impl Iterator<Item = f64>, log: bool) -> Self {
        let vals: Vec<f64> =
            values.filter(|v| v.is_finite() && (!log || *v > 0.0)).map(|v| if log { v.log10() } else { v }).collect();
        let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let (lo, hi) = match (lo.is_finite(), hi > lo) {
            (false, _) => (0.0, 1.0),
            (true, false) => (lo - 0.5, hi + 0.5),
            (true, true) => {
                let pad = 0.05 * (hi - lo);
                (lo - pad, hi + pad)
            }
        };
        Axis { lo, hi, log }
    }

    fn frac(&self, v: f64) -> Option<f64> {
        let v = if self.log {
            if v <= 0.0 {
                return None;
            }
            v.log10()
        } else {
            v
        };
        v.is_finite().then(|| (v - self.lo) / (self.hi - self.lo))
    }

    fn ticks(&self) -> Vec<(f64, String)> {
        if self.log {
            let (a, b) = (self.lo.floor() as i32, self.hi.ceil() as i32);
            let mut t: Vec<f64> = (a..=b).map(|e| 10f64.powi(e)).collect();
            if t.iter().filter(|v| self.frac(**v).is_some_and(|f| (0.0..=1.0).contains(&f))).count() < 2 {
                t = (a..=b).flat_map(|e| [1.0, 2.0, 5.0].map(|m| m * 10f64.powi(e))).collect();
            }
            t.into_iter()
                .filter(|v| self.frac(*v).is_some_and(|f| (0.0..=1.0).contains(&f)))
                .map(|v| (v, format!("{v}")))
                .collect()
        } else {
            let span = self.hi - self.lo;
            let raw = span / 6.0;
            let mag = 10f64.powf(raw.log10().floor());
            let step = [1.0, 2.0, 5.0, 10.0].into_iter().map(|m| m * mag).find(|s| *s >= raw).unwrap_or(mag);
            let mut v = (self.lo / step).ceil() * step;
            let mut out = vec![];
            while v <= self.hi {
                out.push((v, format!("{}", (v / step).round() * step)));
                v += step;
            }
            out
        }
    }
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render(plot: &Plot) -> String {
    let (ml, mr, mt, mb) = MARGIN;
    let (pw, ph) = (W - ml - mr, H - mt - mb);
    let xa = Axis::new(plot.series.iter().flat_map(|s| s.points.iter().map(|p| p.0)), plot.log_x);
    let ya = Axis::new(plot.series.iter().flat_map(|s| s.points.iter().map(|p| p.1)), plot.log_y);
    let px = |f: f64| ml + f * pw;
    let py = |f: f64| mt + (1.0 - f) * ph;

    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#).unwrap();
    writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#).unwrap();
    writeln!(s, r#"<text x="{}" y="20" text-anchor="middle" font-size="14">{}</text>"#, W / 2.0, esc(&plot.title))
        .unwrap();
    writeln!(s, r#"<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#).unwrap();
    for (v, label) in xa.ticks() {
        let x = px(xa.frac(v).unwrap());
        writeln!(s, r#"<line x1="{x:.2}" y1="{}" x2="{x:.2}" y2="{}" stroke="black"/>"#, mt + ph, mt + ph + 5.0)
            .unwrap();
        writeln!(s, r#"<text x="{x:.2}" y="{}" text-anchor="middle">{label}</text>"#, mt + ph + 18.0).unwrap();
    }
    for (v, label) in ya.ticks() {
        let y = py(ya.frac(v).unwrap());
        writeln!(s, r#"<line x1="{}" y1="{y:.2}" x2="{ml}" y2="{y:.2}" stroke="black"/>"#, ml - 5.0).unwrap();
        writeln!(s, r#"<text x="{}" y="{:.2}" text-anchor="end">{label}</text>"#, ml - 8.0, y + 4.0).unwrap();
    }
    writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#, ml + pw / 2.0, H - 15.0, esc(&plot.x_label))
        .unwrap();
    writeln!(
        s,
        r#"<text x="15" y="{0}" text-anchor="middle" transform="rotate(-90 15 {0})">{1}</text>"#,
        mt + ph / 2.0,
        esc(&plot.y_label)
    )
    .unwrap();
    for (i, series) in plot.series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        for &(x, y) in &series.points {
            if let (Some(fx), Some(fy)) = (xa.frac(x), ya.frac(y)) {
                writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{color}"/>"#, px(fx), py(fy)).unwrap();
            }
        }
        let ly = mt + 15.0 + 16.0 * i as f64;
        writeln!(s, r#"<circle cx="{}" cy="{ly}" r="4" fill="{color}"/>"#, ml + 14.0).unwrap();
        writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, ml + 24.0, ly + 4.0, esc(&series.label)).unwrap();
    }
    s.push_str("</svg>\n");
    s
}
