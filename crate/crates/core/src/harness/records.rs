use serde::Serialize;

use super::svg::{polylines_svg, View};
use crate::atlas::{classify_fractional, critical_points, gamma, gamma_branch, omega, ExponentPair};
use crate::error::Result;
use crate::spectral::{boundary_sample, BoundaryPolyline, RegionQuery, ShapeReport, Window};
use crate::{Pair, Rational};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassifyRecord {
    pub d: u32,
    pub s: String,
    pub x: String,
    pub y: String,
    pub region: String,
    pub gamma: String,
    pub omega: String,
    pub omega_in_range: bool,
    pub branch: String,
    pub tied: Vec<String>,
    pub proven: bool,
}

pub fn classify_record(d: u32, s: &Rational, pair: &Pair) -> Result<ClassifyRecord> {
    let c = classify_fractional(d, s, pair)?;
    let br = gamma_branch(d, pair)?;
    let w = omega(d, s, pair)?;
    Ok(ClassifyRecord {
        d,
        s: s.to_string(),
        x: pair.x().to_string(),
        y: pair.y().to_string(),
        region: c.to_string(),
        gamma: gamma(d, pair)?.to_string(),
        omega: w.value.to_string(),
        omega_in_range: w.in_range,
        branch: br.branch.name().into(),
        tied: br.tied.iter().map(|b| b.name().to_string()).collect(),
        proven: c.proven(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GammaRecord {
    pub d: u32,
    pub x: String,
    pub y: String,
    pub gamma: String,
    pub branch: String,
    pub raw_argmax: String,
    pub tie: bool,
}

pub fn gamma_record(d: u32, pair: &Pair) -> Result<GammaRecord> {
    let br = gamma_branch(d, pair)?;
    Ok(GammaRecord {
        d,
        x: pair.x().to_string(),
        y: pair.y().to_string(),
        gamma: gamma(d, pair)?.to_string(),
        branch: br.branch.name().into(),
        raw_argmax: br.raw_argmax.name().into(),
        tie: br.raw_tie,
    })
}

/// Shape record plus boundary polylines of `Z(ℓ)` inside a window.
#[derive(Clone, Debug, Serialize)]
pub struct RegionRecord {
    pub shape: ShapeReport,
    pub window: Window<f64>,
    pub polylines: Vec<BoundaryPolyline<f64>>,
}

impl RegionRecord {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("polyline,re,im\n");
        for (i, line) in self.polylines.iter().enumerate() {
            for p in &line.points {
                out.push_str(&format!("{i},{},{}\n", p.re, p.im));
            }
        }
        out
    }

    pub fn to_svg(&self) -> String {
        let w = self.window;
        let lines: Vec<Vec<(f64, f64)>> =
            self.polylines.iter().map(|l| l.points.iter().map(|p| (p.re, p.im)).collect()).collect();
        polylines_svg(&lines, View { x_min: w.re_min, x_max: w.re_max, y_min: w.im_min, y_max: w.im_max })
    }
}

pub fn region_record(query: &RegionQuery<f64>, window: Window<f64>, n: usize) -> Result<RegionRecord> {
    Ok(RegionRecord { shape: ShapeReport::new(query), window, polylines: boundary_sample(query, &window, n)? })
}

/// One row of the shape table.
#[derive(Clone, Debug, Serialize)]
pub struct ShapeRow {
    pub label: String,
    pub report: ShapeReport,
}

/// Shapes of `Z(ℓ)` at the named points and a few interior pairs, for each `ℓ`.
///
/// Pairs whose `ω` is negative are skipped.
pub fn shapes_table(d: u32, s: &Rational, ells: &[f64]) -> Result<Vec<ShapeRow>> {
    let mut pairs: Vec<(String, Pair)> = Vec::new();
    if let Ok(cp) = critical_points::<i64>(d) {
        pairs.extend(cp.named().into_iter().map(|(n, p)| (n.to_string(), p.clone())));
    }
    for (xn, xd, yn, yd) in [(1, 2, 1, 4), (3, 4, 1, 4), (1, 2, 0, 1), (11, 20, 9, 20)] {
        let p = ExponentPair::from_fractions(xn, xd, yn, yd)?;
        pairs.push((p.to_string(), p));
    }
    let mut rows = Vec::new();
    for &ell in ells {
        for (label, pair) in &pairs {
            if let Ok(q) = RegionQuery::new(d, *s, pair.clone(), ell) {
                rows.push(ShapeRow { label: label.clone(), report: ShapeReport::new(&q) });
            }
        }
    }
    Ok(rows)
}

/// A named polyline in the `(x, y)` square.
pub type Outline = (String, Vec<(f64, f64)>);

/// A named region query with its drawing window.
pub type GalleryItem = (String, RegionQuery<f64>, Window<f64>);

/// Outlines of the regions in the `(x, y)` square: `P`, `T`, `Q` and `Q'`.
pub fn atlas_outlines(d: u32) -> Result<Vec<Outline>> {
    let cp = critical_points::<i64>(d)?;
    let pt = |p: &Pair| p.to_f64();
    let origin = (0.0, 0.0);
    let one = (1.0, 1.0);
    let close = |mut v: Vec<(f64, f64)>| {
        v.push(v[0]);
        v
    };
    let mut out = vec![
        ("square".to_string(), close(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])),
        ("diagonal".to_string(), vec![origin, one]),
        ("P".to_string(), close(vec![pt(&cp.e), (1.0, 0.0), pt(&cp.e_dual), pt(&cp.b_dual), pt(&cp.b)])),
        ("T".to_string(), close(vec![pt(&cp.b), pt(&cp.b_dual), pt(&cp.d_dual), pt(&cp.d_point)])),
        ("Q".to_string(), close(vec![origin, pt(&cp.e), pt(&cp.b), pt(&cp.d_point)])),
        ("Q'".to_string(), close(vec![one, pt(&cp.e_dual), pt(&cp.b_dual), pt(&cp.d_dual)])),
    ];
    // R0 boundary x − y = 2/d for the Laplacian
    let g = 2.0 / d as f64;
    if g < 1.0 {
        out.push(("R0".to_string(), vec![(g, 0.0), (1.0, 1.0 - g)]));
    }
    Ok(out)
}

/// A gallery of region queries with a window suited to each.
pub fn figure_gallery() -> Result<Vec<GalleryItem>> {
    let two = Rational::from_integer(2);
    type Item = (&'static str, u32, (i64, i64, i64, i64), f64);
    let items: [Item; 6] = [
        ("disk_d3", 3, (3, 4, 1, 4), 2.0),
        ("uniform_h_d3", 3, (1, 2, 1, 2), 1.0),
        ("shrinking_d3", 3, (11, 20, 9, 20), 1.0),
        ("widening_d3", 3, (1, 2, 0, 1), 1.5),
        ("punctured_d4", 4, (9, 16, 1, 16), 1.0),
        ("cone_d4", 4, (1, 2, 0, 1), 2.0),
    ];
    let mut out = Vec::new();
    for (name, d, (a, b, c, e), ell) in items {
        let q = RegionQuery::new(d, two, ExponentPair::from_fractions(a, b, c, e)?, ell)?;
        out.push((name.to_string(), q, Window::square(4.0)?));
    }
    Ok(out)
}

pub fn atlas_svg(d: u32) -> Result<String> {
    let lines: Vec<Vec<(f64, f64)>> = atlas_outlines(d)?.into_iter().map(|(_, l)| l).collect();
    Ok(polylines_svg(&lines, View { x_min: -0.05, x_max: 1.05, y_min: -0.05, y_max: 1.05 }))
}
