use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::atlas::{classify_fractional, gamma, omega, Classification, ExponentPair};
use crate::error::{domain, Result};
use crate::scalar::{ratio_to, Scalar};
use crate::{Pair, Rational};

/// A point `z ∈ ℂ \ [0, ∞)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectralParameter<S: Scalar> {
    z: Complex<S>,
    dist: S,
}

impl<S: Scalar> SpectralParameter<S> {
    pub fn new(re: S, im: S) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return domain("spectral parameter must be finite");
        }
        if im.is_zero() && re >= S::zero() {
            return domain(format!("z = {re} lies on the ray [0, inf)"));
        }
        let z = Complex::new(re, im);
        let dist = if re >= S::zero() { im.abs() } else { z.norm() };
        Ok(Self { z, dist })
    }

    pub fn from_complex(z: Complex<S>) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn value(&self) -> Complex<S> {
        self.z
    }

    pub fn re(&self) -> S {
        self.z.re
    }

    pub fn im(&self) -> S {
        self.z.im
    }

    pub fn abs(&self) -> S {
        self.z.norm()
    }

    /// Distance from `z` to the ray `[0, ∞)`.
    pub fn dist(&self) -> S {
        self.dist
    }

    /// The square root with positive imaginary part.
    pub fn sqrt(&self) -> Complex<S> {
        let w = self.z.sqrt();
        if w.im < S::zero() {
            -w
        } else {
            w
        }
    }

    pub fn conj(&self) -> Self {
        Self { z: self.z.conj(), dist: self.dist }
    }

    pub fn scale(&self, lambda: S) -> Result<Self> {
        if lambda <= S::zero() {
            return domain("scaling factor must be positive");
        }
        Self::new(self.z.re * lambda, self.z.im * lambda)
    }
}

/// Parameters `(d, s, pair, ℓ)` of a region `Z^s_{p,q}(ℓ)` with `γ`, `ω` resolved.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegionQuery<S: Scalar> {
    pub d: u32,
    pub s: Rational,
    pub pair: Pair,
    pub ell: S,
    gamma: Rational,
    omega: Rational,
    classification: Option<Classification>,
}

impl<S: Scalar> RegionQuery<S> {
    /// Query for `(−Δ)^{s/2}` in `d ≥ 2` dimensions.
    ///
    /// Pairs off the estimate-bearing regions are accepted as long as `ω ≥ 0`;
    /// [`RegionQuery::classification`] records where the pair sits.
    pub fn new(d: u32, s: Rational, pair: Pair, ell: S) -> Result<Self> {
        check_ell(ell)?;
        let classification = classify_fractional(d, &s, &pair)?;
        let g = gamma(d, &pair)?;
        let w = omega(d, &s, &pair)?.value;
        if w.is_negative() {
            return domain(format!("omega = {w} < 0: pair {pair} lies beyond the line x - y = s/d"));
        }
        Ok(Self { d, s, pair, ell, gamma: g, omega: w, classification: Some(classification) })
    }

    pub fn laplacian(d: u32, pair: Pair, ell: S) -> Result<Self> {
        Self::new(d, Rational::from_integer(2), pair, ell)
    }

    /// One-dimensional Laplacian, where the kernel is explicit and
    /// `γ = 1 − (x − y)`, `ω = 1 − (x − y)/2` for `0 ≤ x − y ≤ 1`.
    pub fn line(pair: Pair, ell: S) -> Result<Self> {
        check_ell(ell)?;
        let gap = pair.gap();
        if gap.is_negative() || gap > Ratio::one() {
            return domain(format!("pair {pair} needs 0 <= x - y <= 1 on the line"));
        }
        let g = Ratio::one() - gap;
        let w = Ratio::one() - gap / 2;
        Ok(Self { d: 1, s: Rational::from_integer(2), pair, ell, gamma: g, omega: w, classification: None })
    }

    pub fn with_ell(&self, ell: S) -> Result<Self> {
        check_ell(ell)?;
        Ok(Self { ell, ..self.clone() })
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    pub fn gamma_f(&self) -> S {
        ratio_to(&self.gamma)
    }

    pub fn omega_f(&self) -> S {
        ratio_to(&self.omega)
    }

    /// Region label of the pair; `None` for the one-dimensional query.
    pub fn classification(&self) -> Option<Classification> {
        self.classification
    }

    pub fn estimate_bearing(&self) -> bool {
        self.classification.is_none_or(|c| c.estimate_bearing())
    }

    /// On the line `x − y = s/d`, i.e. `ω = 0`.
    pub fn on_sobolev_line(&self) -> bool {
        self.omega.is_zero()
    }
}

fn check_ell<S: Scalar>(ell: S) -> Result<()> {
    if !(ell > S::zero()) || !ell.is_finite() {
        return domain(format!("ell must be positive and finite (got {ell})"));
    }
    Ok(())
}

fn powr<S: Scalar>(base: S, e: S) -> S {
    if e.is_zero() {
        S::one()
    } else {
        base.powf(e)
    }
}

/// `κ(z) = |z|^{γ−ω} dist(z, [0, ∞))^{−γ}`.
pub fn kappa<S: Scalar>(query: &RegionQuery<S>, z: &SpectralParameter<S>) -> S {
    let g = query.gamma_f();
    powr(z.abs(), g - query.omega_f()) * powr(z.dist(), -g)
}

/// `κ(z) = |z|^{−1 + (d/s)(x−y) + γ} dist^{−γ}`, evaluated from the pair directly.
pub fn kappa_literal<S: Scalar>(query: &RegionQuery<S>, z: &SpectralParameter<S>) -> S {
    let g = query.gamma_f();
    let gap: S = ratio_to(&ExponentPair::gap(&query.pair));
    let ds = S::from_usize_lossy(query.d as usize) / ratio_to::<S, i64>(&query.s);
    powr(z.abs(), -S::one() + ds * gap + g) * powr(z.dist(), -g)
}

/// `z ∈ Z(ℓ)`, decided by the two-piece description of the region.
pub fn membership<S: Scalar>(query: &RegionQuery<S>, z: &SpectralParameter<S>) -> bool {
    let g = query.gamma_f();
    let w = query.omega_f();
    let ell = query.ell;
    if z.re() <= S::zero() {
        ell * powr(z.abs(), w) >= S::one()
    } else {
        ell * powr(z.im().abs(), g) >= powr(z.abs(), g - w)
    }
}
