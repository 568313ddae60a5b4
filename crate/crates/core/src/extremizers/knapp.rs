use std::sync::Arc;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::bump::{phi, psi};
use crate::error::{domain, Error, Result};
use crate::grid::{inverse_transform, Axis, Domain, GridField, GridSpec};
use crate::scalar::Scalar;

/// Samples per axis of the default Knapp grid.
const KNAPP_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct KnappConstants<S: Scalar> {
    /// Transverse cap width factor `1/√(2(d−1)s)`.
    pub c: S,
    /// Positive root of `2k + k²/100 = 1/(2s)`.
    pub k: S,
    /// `max_{[0,1]} |μ''|` for `μ(t) = (1+t)^{s/2}`; zero at `s = 2`.
    pub m_s: S,
    /// Largest admissible `δ`: `min{1/100, s, s²/M_s}`.
    pub c_s: S,
}

pub fn knapp_constants<S: Scalar>(d: usize, s: S) -> Result<KnappConstants<S>> {
    if d < 2 || !(s > S::zero()) || !s.is_finite() {
        return domain(format!("Knapp constants need d >= 2 and s > 0 (got d = {d}, s = {s})"));
    }
    let two = S::lit(2.0);
    let c = (two * S::from_usize_lossy(d - 1) * s).sqrt().recip();
    let c0 = (two * s).recip();
    let k = two * c0 / (two + (S::lit(4.0) + S::lit(0.04) * c0).sqrt());
    // μ'' = a(a−1)(1+t)^{a−2} is monotone in t, so the max sits at an endpoint.
    let a = s / two;
    let m_s = (a * (a - S::one())).abs() * S::one().max(two.powf(a - two));
    let cap = if m_s > S::zero() { s * s / m_s } else { S::infinity() };
    let c_s = S::lit(0.01).min(s).min(cap);
    Ok(KnappConstants { c, k, m_s, c_s })
}

/// Parameters of one Knapp test function.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct KnappSpec<S: Scalar> {
    pub d: usize,
    pub s: S,
    pub delta: S,
    pub constants: KnappConstants<S>,
    /// Whether `δ < c_s`, the range where the pointwise lower bound is guaranteed.
    pub proof_regime: bool,
}

impl<S: Scalar> KnappSpec<S> {
    /// Requires `0 < δ < c_s`.
    pub fn new(d: usize, s: S, delta: S) -> Result<Self> {
        let spec = Self::exploratory(d, s, delta)?;
        if !spec.proof_regime {
            return domain(format!("delta = {delta} must lie in (0, {})", spec.constants.c_s));
        }
        Ok(spec)
    }

    /// Accepts any `δ ∈ (0, 1)`; `proof_regime` records whether `δ < c_s`.
    pub fn exploratory(d: usize, s: S, delta: S) -> Result<Self> {
        let constants = knapp_constants(d, s)?;
        if !(delta > S::zero() && delta < S::one()) {
            return domain(format!("delta = {delta} must lie in (0, 1)"));
        }
        Ok(Self { d, s, delta, constants, proof_regime: delta < constants.c_s })
    }

    pub fn transverse_scale(&self) -> S {
        self.constants.c * self.delta.sqrt()
    }

    pub fn axial_scale(&self) -> S {
        self.constants.k * self.delta
    }

    /// `ψ((ξ_d − 1)/(kδ)) ∏_{j<d} φ(ξ_j/(c√δ))`.
    pub fn hat(&self, xi: &[S]) -> S {
        let t = self.transverse_scale();
        let last = self.d - 1;
        xi[..last]
            .iter()
            .fold(psi((xi[last] - S::one()) / self.axial_scale()), |acc, &v| acc * phi(v / t))
    }
}

/// Carrier grid with 64 points per axis: transverse spacing `c√δ/8`, axial
/// spacing `kδ/16` centred on the middle of the axial support.
pub fn knapp_grid<S: Scalar>(spec: &KnappSpec<S>) -> Result<GridSpec<S>> {
    let tau = S::TAU();
    let mut axes = vec![Axis::new(KNAPP_N, S::lit(8.0) * tau / spec.transverse_scale()); spec.d - 1];
    let kd = spec.axial_scale();
    axes.push(Axis::with_carrier(KNAPP_N, S::lit(16.0) * tau / kd, S::one() + S::lit(0.625) * kd));
    GridSpec::new(axes)
}

fn check_resolution<S: Scalar>(spec: &KnappSpec<S>, grid: &GridSpec<S>) -> Result<()> {
    if grid.d() != spec.d {
        return domain(format!("grid dimension {} differs from d = {}", grid.d(), spec.d));
    }
    // slack for the rounding in `2π/L`
    let eighth = S::lit(0.125) * (S::one() + S::epsilon() * S::lit(64.0));
    for (i, a) in grid.axes().iter().enumerate() {
        let axial = i + 1 == spec.d;
        let (width, lo, hi) = if axial {
            let kd = spec.axial_scale();
            (kd, S::one() + kd * S::lit(0.25), S::one() + kd)
        } else {
            let t = spec.transverse_scale();
            (t, -t, t)
        };
        if a.frequency_step() > width * eighth {
            return Err(Error::Resolution {
                axis: i,
                detail: format!("frequency step {} exceeds {}", a.frequency_step(), width * eighth),
            });
        }
        let (f0, f1) = a.frequency_range();
        if f0 > lo || f1 < hi {
            return Err(Error::Resolution {
                axis: i,
                detail: format!("frequency window [{f0}, {f1}] misses the support [{lo}, {hi}]"),
            });
        }
    }
    Ok(())
}

/// Frequency-domain samples of the Knapp function on `grid`.
pub fn knapp_hat<S: Scalar>(spec: &KnappSpec<S>, grid: Arc<GridSpec<S>>) -> Result<GridField<S>> {
    check_resolution(spec, &grid)?;
    let d = spec.d;
    GridField::from_fn(grid, Domain::Frequency, |xi| Complex::new(spec.hat(&xi[..d]), S::zero()))
}

/// The Knapp function in space, via the inverse transform of its samples.
pub fn knapp_field<S: Scalar>(spec: &KnappSpec<S>, grid: Arc<GridSpec<S>>) -> Result<GridField<S>> {
    inverse_transform(&knapp_hat(spec, grid)?)
}

/// Centred box on which the Knapp output is bounded below.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct KnappBox<S: Scalar> {
    pub half_widths: Vec<S>,
}

impl<S: Scalar> KnappBox<S> {
    pub fn contains(&self, x: &[S]) -> bool {
        x.iter().zip(&self.half_widths).all(|(v, h)| v.abs() <= *h)
    }

    pub fn volume(&self) -> S {
        self.half_widths.iter().fold(S::one(), |acc, h| acc * (*h + *h))
    }

    /// All `2^d` corners.
    pub fn corners(&self) -> Vec<Vec<S>> {
        let d = self.half_widths.len();
        (0..1usize << d)
            .map(|mask| {
                (0..d)
                    .map(|i| if mask >> i & 1 == 1 { self.half_widths[i] } else { -self.half_widths[i] })
                    .collect()
            })
            .collect()
    }
}

pub fn knapp_box<S: Scalar>(spec: &KnappSpec<S>) -> KnappBox<S> {
    let two_hundred = S::lit(200.0);
    let t = (two_hundred * S::from_usize_lossy(spec.d - 1) * spec.transverse_scale()).recip();
    let mut half_widths = vec![t; spec.d - 1];
    half_widths.push((two_hundred * spec.axial_scale()).recip());
    KnappBox { half_widths }
}

/// `max |x·ξ − x_d|` over the box and the discrete frequency support on `grid`.
pub fn knapp_phase_margin<S: Scalar>(spec: &KnappSpec<S>, grid: &GridSpec<S>) -> S {
    let bx = knapp_box(spec);
    let last = spec.d - 1;
    (0..grid.len())
        .filter_map(|i| {
            let xi = grid.frequency(i);
            if spec.hat(&xi[..spec.d]) == S::zero() {
                return None;
            }
            let mut m = bx.half_widths[last] * (xi[last] - S::one()).abs();
            for j in 0..last {
                m = m + bx.half_widths[j] * xi[j].abs();
            }
            Some(m)
        })
        .fold(S::zero(), S::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_for_laplacian_plane() {
        let k = knapp_constants::<f64>(2, 2.0).unwrap();
        assert!((k.c - 0.5).abs() < 1e-15);
        assert!((k.k - (-2.0 + 4.01f64.sqrt()) / 0.02).abs() < 1e-12);
        assert!((2.0 * k.k + k.k * k.k / 100.0 - 0.25).abs() < 1e-15);
        assert_eq!(k.m_s, 0.0);
        assert_eq!(k.c_s, 0.01);
    }

    #[test]
    fn regime_flag() {
        assert!(KnappSpec::<f64>::new(2, 2.0, 0.125).is_err());
        let spec = KnappSpec::<f64>::exploratory(2, 2.0, 0.125).unwrap();
        assert!(!spec.proof_regime);
        assert!(KnappSpec::<f64>::new(2, 2.0, 0.005).unwrap().proof_regime);
    }

    #[test]
    fn box_example() {
        let spec = KnappSpec::<f64>::exploratory(2, 2.0, 1.0 / 16.0).unwrap();
        let b = knapp_box(&spec);
        assert!((b.half_widths[0] - 1.0 / 25.0).abs() < 1e-15);
        assert!((b.half_widths[1] - 16.0 / (200.0 * spec.constants.k)).abs() < 1e-12);
    }

    #[test]
    fn coarse_grid_is_rejected_with_axis() {
        let spec = KnappSpec::<f64>::exploratory(2, 2.0, 1.0 / 16.0).unwrap();
        let g = Arc::new(GridSpec::cubic(2, 64, 20.0).unwrap());
        match knapp_hat(&spec, g) {
            Err(Error::Resolution { axis, .. }) => assert_eq!(axis, 0),
            other => panic!("expected a resolution error, got {other:?}"),
        }
        let g = Arc::new(knapp_grid(&spec).unwrap());
        assert!(knapp_hat(&spec, g).is_ok());
    }
}
