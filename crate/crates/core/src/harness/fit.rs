use serde::Serialize;

use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// Least-squares line through `(ln δ, ln value)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    pub max_residual: f64,
    pub points: usize,
    /// Exact expected exponent, e.g. `"-5/8"`.
    pub expected: Option<String>,
    pub expected_value: Option<f64>,
    pub tolerance: Option<f64>,
    pub pass: Option<bool>,
}

impl SlopeFit {
    /// Attaches the expected exponent and records the verdict `|slope − expected| ≤ tol`.
    pub fn judge(mut self, expected: &crate::Rational, tol: f64) -> Self {
        let e = *expected.numer() as f64 / *expected.denom() as f64;
        self.expected = Some(expected.to_string());
        self.expected_value = Some(e);
        self.tolerance = Some(tol);
        self.pass = Some((self.slope - e).abs() <= tol);
        self
    }

    pub fn predict(&self, delta: f64) -> f64 {
        (self.intercept + self.slope * delta.ln()).exp()
    }
}

pub fn slope_fit<S: Scalar>(points: &[(S, S)]) -> Result<SlopeFit> {
    if points.len() < 4 {
        return domain(format!("slope fit needs at least 4 points (got {})", points.len()));
    }
    if points.iter().any(|(d, v)| !(*d > S::zero()) || !(*v > S::zero()) || !v.is_finite()) {
        return domain("slope fit needs positive, finite deltas and values");
    }
    let xy: Vec<(f64, f64)> = points.iter().map(|(d, v)| (d.as_f64().ln(), v.as_f64().ln())).collect();
    let n = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / n;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return domain("slope fit needs at least two distinct deltas");
    }
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let max_residual = xy.iter().map(|p| (p.1 - intercept - slope * p.0).abs()).fold(0.0, f64::max);
    Ok(SlopeFit {
        slope,
        intercept,
        max_residual,
        points: xy.len(),
        expected: None,
        expected_value: None,
        tolerance: None,
        pass: None,
    })
}
