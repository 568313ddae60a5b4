use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::fit::{slope_fit, SlopeFit};
use crate::error::{domain, Error, Result};
use crate::extremizers::{knapp_grid, knapp_hat, measurement_annuli, spherical_constants, KnappSpec};
use crate::grid::{apply_symbol_hat, inverse_transform, lp_norm, SymbolSpec};
use crate::kernels::{gauss_legendre3, q_decomposition, young_upper_bound_1d, QParts};
use crate::{Pair, Rational};

/// Which lower-bound experiment a sweep runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Experiment {
    /// `‖m_δ(D) f_δ‖_q / ‖f_δ‖_p` for the Knapp function on a grid.
    Knapp,
    /// `‖F^{−1}(m_δ φ)‖_{L^q(∪A_n)}` by radial quadrature.
    Spherical,
    /// Young bound `‖G_z‖_r` at `z = 1 + iδ`.
    Kernel1d,
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Knapp => "knapp",
            Self::Spherical => "spherical",
            Self::Kernel1d => "kernel1d",
        })
    }
}

impl FromStr for Experiment {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "knapp" => Ok(Self::Knapp),
            "spherical" => Ok(Self::Spherical),
            "kernel1d" => Ok(Self::Kernel1d),
            other => Err(Error::Parse(format!("unknown experiment '{other}'"))),
        }
    }
}

impl Experiment {
    /// Dyadic ladder used when none is given.
    pub fn default_deltas(self) -> Vec<f64> {
        let range = match self {
            Self::Knapp => 3..=7,
            Self::Spherical => 20..=24,
            Self::Kernel1d => 3..=10,
        };
        range.map(|k| 2f64.powi(-k)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepPlan {
    pub experiment: Experiment,
    pub d: u32,
    pub s: Rational,
    pub pair: Pair,
    pub deltas: Vec<f64>,
    pub tolerance: f64,
}

impl SweepPlan {
    pub fn new(experiment: Experiment, d: u32, s: Rational, pair: Pair, deltas: Vec<f64>) -> Result<Self> {
        if deltas.len() < 4 {
            return domain("a sweep needs at least 4 values of delta");
        }
        if deltas.windows(2).any(|w| !(w[1] < w[0])) || deltas.iter().any(|d| !(*d > 0.0)) {
            return domain("delta list must be positive and strictly decreasing");
        }
        if s <= Rational::zero() {
            return domain("order s must be positive");
        }
        let sf = *s.numer() as f64 / *s.denom() as f64;
        match experiment {
            Experiment::Knapp => {
                if !(2..=3).contains(&d) {
                    return domain("the Knapp sweep runs on 2- or 3-dimensional grids");
                }
                if deltas[0] >= 1.0 {
                    return domain("Knapp deltas must lie in (0, 1)");
                }
            }
            Experiment::Spherical => {
                if d < 2 {
                    return domain("the spherical sweep needs d >= 2");
                }
                if pair.y().is_zero() {
                    return domain("the spherical sweep needs a finite target exponent (y > 0)");
                }
                let spec = spherical_constants(d as usize, sf)?;
                if deltas[0] > spec.max_delta() {
                    return domain(format!("spherical deltas must not exceed {}", spec.max_delta()));
                }
            }
            Experiment::Kernel1d => {
                if d != 1 {
                    return domain("the kernel sweep is one-dimensional");
                }
                if pair.x() < pair.y() {
                    return domain("Young's inequality needs x >= y");
                }
            }
        }
        Ok(Self { experiment, d, s, pair, deltas, tolerance: 0.1 })
    }

    pub fn with_defaults(experiment: Experiment, d: u32, s: Rational, pair: Pair) -> Result<Self> {
        Self::new(experiment, d, s, pair, experiment.default_deltas())
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    /// Predicted exponent of `δ` in the measured quantity.
    pub fn expected_exponent(&self) -> Rational {
        let d = Rational::from_integer(self.d as i64);
        let (x, y) = (*self.pair.x(), *self.pair.y());
        match self.experiment {
            Experiment::Knapp => -Rational::one() + (d + 1) / 2 * (x - y),
            Experiment::Spherical => (d - 1) / 2 - d * y,
            Experiment::Kernel1d => -Rational::one() + x - y,
        }
    }

    fn s_f64(&self) -> f64 {
        *self.s.numer() as f64 / *self.s.denom() as f64
    }

    fn exponents(&self) -> (f64, f64) {
        self.pair.exponents_f64()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepPoint {
    pub delta: f64,
    pub value: f64,
    pub diagnostics: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub plan: SweepPlan,
    pub points: Vec<SweepPoint>,
    pub fit: SlopeFit,
    /// Radial samples of the spherical experiment, keyed by the index of `δ`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub radial: Vec<(usize, QParts<f64>)>,
}

impl SweepReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("delta,value\n");
        for p in &self.points {
            out.push_str(&format!("{:e},{:e}\n", p.delta, p.value));
        }
        out
    }

    pub fn radial_csv(&self) -> String {
        let mut out = format!("delta,{}\n", QParts::<f64>::CSV_HEADER);
        for (i, q) in &self.radial {
            out.push_str(&format!("{:e},{}\n", self.points[*i].delta, q.csv_row()));
        }
        out
    }
}

fn knapp_point(plan: &SweepPlan, delta: f64) -> Result<SweepPoint> {
    let spec = KnappSpec::exploratory(plan.d as usize, plan.s_f64(), delta)?;
    let grid = Arc::new(knapp_grid(&spec)?);
    let hat = knapp_hat(&spec, grid)?;
    let input = inverse_transform(&hat)?;
    let output = inverse_transform(&apply_symbol_hat(&hat, &SymbolSpec::imag_part(spec.s, delta)?)?)?;
    let (p, q) = plan.exponents();
    let denom = lp_norm(&input, p)?;
    let num = lp_norm(&output, q)?;
    let mut diagnostics = BTreeMap::new();
    diagnostics.insert("input_norm".into(), denom);
    diagnostics.insert("output_norm".into(), num);
    diagnostics.insert("proof_regime".into(), f64::from(u8::from(spec.proof_regime)));
    Ok(SweepPoint { delta, value: num / denom, diagnostics })
}

fn spherical_point(plan: &SweepPlan, delta: f64) -> Result<(SweepPoint, Vec<QParts<f64>>)> {
    let d = plan.d as usize;
    let spec = spherical_constants(d, plan.s_f64())?;
    let annuli = measurement_annuli(&spec, delta)?;
    let nodes: Vec<(f64, f64)> = annuli.iter().flat_map(|a| gauss_legendre3(a.lo, a.hi)).collect();
    let parts: Vec<QParts<f64>> =
        nodes.par_iter().map(|(r, _)| q_decomposition(&spec, delta, *r)).collect::<Result<_>>()?;
    let (_, q) = plan.exponents();
    let half_d = d as f64 / 2.0;
    let sphere = 2.0 * std::f64::consts::PI.powf(half_d) / libm::tgamma(half_d);
    let sum: f64 = nodes
        .iter()
        .zip(&parts)
        .map(|((r, w), part)| w * part.q.abs().powf(q) * r.powi(d as i32 - 1))
        .sum();
    let value = (sphere * sum).powf(1.0 / q);
    let mut diagnostics = BTreeMap::new();
    diagnostics.insert("annuli".into(), annuli.len() as f64);
    diagnostics.insert(
        "min_i1_margin".into(),
        parts.iter().map(|p| p.i1 - p.i1_lower).fold(f64::INFINITY, f64::min),
    );
    diagnostics.insert(
        "max_i2_excess".into(),
        parts.iter().map(|p| p.i2.abs() - p.i2_upper).fold(f64::NEG_INFINITY, f64::max),
    );
    diagnostics.insert("max_sum_defect".into(), parts.iter().map(|p| p.sum_defect()).fold(0.0, f64::max));
    Ok((SweepPoint { delta, value, diagnostics }, parts))
}

fn kernel_point(plan: &SweepPlan, delta: f64) -> Result<SweepPoint> {
    let (p, q) = plan.exponents();
    let value = young_upper_bound_1d(Complex::new(1.0, delta), p, q)?;
    Ok(SweepPoint { delta, value, diagnostics: BTreeMap::new() })
}

/// Runs every `δ` of the plan in parallel and fits the log-log slope.
pub fn run_sweep(plan: &SweepPlan) -> Result<SweepReport> {
    if plan.experiment == Experiment::Knapp {
        // Fail on the finest grid before doing any work.
        let smallest = *plan.deltas.last().expect("validated non-empty");
        knapp_grid(&KnappSpec::exploratory(plan.d as usize, plan.s_f64(), smallest)?)?;
    }
    let results: Vec<(SweepPoint, Vec<QParts<f64>>)> = plan
        .deltas
        .par_iter()
        .map(|&delta| match plan.experiment {
            Experiment::Knapp => knapp_point(plan, delta).map(|p| (p, Vec::new())),
            Experiment::Spherical => spherical_point(plan, delta),
            Experiment::Kernel1d => kernel_point(plan, delta).map(|p| (p, Vec::new())),
        })
        .collect::<Result<_>>()?;
    let mut indexed: Vec<_> = results.into_iter().collect();
    indexed.sort_by(|a, b| b.0.delta.total_cmp(&a.0.delta));
    let mut points = Vec::with_capacity(indexed.len());
    let mut radial = Vec::new();
    for (i, (pt, parts)) in indexed.into_iter().enumerate() {
        radial.extend(parts.into_iter().map(|q| (i, q)));
        points.push(pt);
    }
    let data: Vec<(f64, f64)> = points.iter().map(|p| (p.delta, p.value)).collect();
    let fit = slope_fit(&data)?.judge(&plan.expected_exponent(), plan.tolerance);
    Ok(SweepReport { plan: plan.clone(), points, fit, radial })
}
