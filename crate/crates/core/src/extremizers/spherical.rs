use serde::{Deserialize, Serialize};

use super::bump::phi;
use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// `δ`-independent constants of the radial example.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SphericalSpec<S: Scalar> {
    pub d: usize,
    pub s: S,
    /// `max_{|r−1|≤1/2} |ψ''|` for `ψ(r) = r^s − 1`.
    pub m_tilde: S,
    /// Half-width of the plateau around `r = 1`.
    pub eps: S,
    /// Smallest `λ` with `2 arctan(sλ) ≥ (100/101) π`.
    pub lambda: S,
    /// `10⁻²/λ`.
    pub mu: S,
}

pub fn spherical_constants<S: Scalar>(d: usize, s: S) -> Result<SphericalSpec<S>> {
    if d < 2 || !(s > S::zero()) || !s.is_finite() {
        return domain(format!("spherical constants need d >= 2 and s > 0 (got d = {d}, s = {s})"));
    }
    let two = S::lit(2.0);
    // ψ'' = s(s−1) r^{s−2} is monotone in r.
    let m_tilde = (s * (s - S::one())).abs() * S::lit(0.5).powf(s - two).max(S::lit(1.5).powf(s - two));
    let quarter = S::lit(0.25);
    let eps = if m_tilde > S::zero() { (s / (two * m_tilde)).min(quarter) } else { quarter };
    let lambda = (S::lit(50.0) * S::PI() / S::lit(101.0)).tan() / s;
    let mu = S::lit(0.01) / lambda;
    Ok(SphericalSpec { d, s, m_tilde, eps, lambda, mu })
}

impl<S: Scalar> SphericalSpec<S> {
    /// Largest `δ` for which `|ρ^s − 1| ≤ sλδ` stays inside the plateau.
    pub fn max_delta(&self) -> S {
        self.eps / (S::lit(2.0) * self.lambda)
    }

    /// `[μ/(4δ), μ/(2δ)]`.
    pub fn shell(&self, delta: S) -> (S, S) {
        (self.mu / (S::lit(4.0) * delta), self.mu / (S::lit(2.0) * delta))
    }

    /// `k(sλ) = 2 arctan(sλ)`.
    pub fn concentration(&self) -> S {
        S::lit(2.0) * (self.s * self.lambda).atan()
    }
}

/// The radial frequency profile `r^{s−1−(d−1)/2} P(r)` with `P` a plateau
/// equal to one on `|r − 1| ≤ ε∘` and vanishing outside `|r − 1| < 2ε∘`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphericalProfile<S: Scalar> {
    spec: SphericalSpec<S>,
}

impl<S: Scalar> SphericalProfile<S> {
    pub fn plateau(&self, r: S) -> S {
        phi((r - S::one()) / (S::lit(2.0) * self.spec.eps))
    }

    /// Exponent `s − 1 − (d−1)/2` of the power prefactor.
    pub fn power(&self) -> S {
        self.spec.s - S::one() - S::from_usize_lossy(self.spec.d - 1) * S::lit(0.5)
    }

    pub fn evaluate(&self, r: S) -> S {
        let p = self.plateau(r);
        if p == S::zero() {
            return S::zero();
        }
        r.powf(self.power()) * p
    }

    pub fn support(&self) -> (S, S) {
        let w = S::lit(2.0) * self.spec.eps;
        (S::one() - w, S::one() + w)
    }

    pub fn spec(&self) -> &SphericalSpec<S> {
        &self.spec
    }
}

pub fn spherical_profile_hat<S: Scalar>(spec: &SphericalSpec<S>) -> SphericalProfile<S> {
    SphericalProfile { spec: *spec }
}

/// Radial interval `[lo, hi]` around `π(2n + (d−1)/4)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct Annulus<S: Scalar> {
    pub n: i64,
    pub lo: S,
    pub hi: S,
}

pub fn measurement_annuli<S: Scalar>(spec: &SphericalSpec<S>, delta: S) -> Result<Vec<Annulus<S>>> {
    if !(delta > S::zero() && delta <= spec.max_delta()) {
        return domain(format!("delta = {delta} must lie in (0, {}]", spec.max_delta()));
    }
    let (a, b) = spec.shell(delta);
    let half = S::lit(0.01);
    let offset = S::from_usize_lossy(spec.d - 1) * S::lit(0.25);
    let tau = S::TAU();
    let first = ((a - half) / tau - offset * S::lit(0.5)).floor().to_i64().unwrap_or(0);
    let last = ((b + half) / tau - offset * S::lit(0.5)).ceil().to_i64().unwrap_or(-1);
    let out: Vec<Annulus<S>> = (first..=last)
        .filter_map(|n| {
            let centre = S::PI() * (S::lit(2.0) * S::lit(n as f64) + offset);
            let lo = (centre - half).max(a);
            let hi = (centre + half).min(b);
            (lo < hi).then_some(Annulus { n, lo, hi })
        })
        .collect();
    if out.is_empty() {
        return domain(format!("no measurement annulus fits in [{a}, {b}] at delta = {delta}"));
    }
    Ok(out)
}
