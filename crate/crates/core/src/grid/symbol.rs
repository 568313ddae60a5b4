use num_complex::Complex;
use rayon::prelude::*;

use super::field::{Domain, GridField};
use super::transform::{forward_transform, inverse_transform};
use crate::error::{domain, Result};
use crate::scalar::Scalar;
use crate::spectral::SpectralParameter;

/// A radial Fourier multiplier `ξ ↦ m(|ξ|)`.
///
/// Variants can be built directly; [`apply_symbol`] validates them before use.
#[derive(Clone, Debug, PartialEq)]
pub enum SymbolSpec<S: Scalar> {
    Constant(Complex<S>),
    /// `1/(|ξ|^s − z)`.
    Resolvent { s: S, z: SpectralParameter<S> },
    /// `δ/((|ξ|^s − 1)² + δ²)`.
    ImagPart { s: S, delta: S },
    /// Piecewise-linear in `|ξ|` through the given nodes, zero outside them.
    RadialCustom { radii: Vec<S>, values: Vec<Complex<S>> },
    /// Pointwise product, e.g. a resolvent times a radial cutoff.
    Product(Vec<SymbolSpec<S>>),
}

impl<S: Scalar> SymbolSpec<S> {
    pub fn identity() -> Self {
        Self::Constant(Complex::new(S::one(), S::zero()))
    }

    pub fn resolvent(s: S, z: SpectralParameter<S>) -> Result<Self> {
        let out = Self::Resolvent { s, z };
        out.validate()?;
        Ok(out)
    }

    pub fn imag_part(s: S, delta: S) -> Result<Self> {
        let out = Self::ImagPart { s, delta };
        out.validate()?;
        Ok(out)
    }

    pub fn radial_custom(radii: Vec<S>, values: Vec<Complex<S>>) -> Result<Self> {
        let out = Self::RadialCustom { radii, values };
        out.validate()?;
        Ok(out)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Constant(c) => {
                if !c.re.is_finite() || !c.im.is_finite() {
                    return domain("constant symbol must be finite");
                }
            }
            Self::Resolvent { s, z } => {
                if !(*s > S::zero()) || !s.is_finite() {
                    return domain("resolvent order s must be positive");
                }
                // Re-run the ray check in case the parameter was built elsewhere.
                SpectralParameter::from_complex(z.value())?;
            }
            Self::ImagPart { s, delta } => {
                if !(*s > S::zero()) || !s.is_finite() {
                    return domain("order s must be positive");
                }
                if delta.is_zero() || !delta.is_finite() {
                    return domain("delta must be nonzero and finite");
                }
            }
            Self::RadialCustom { radii, values } => {
                if radii.len() < 2 || radii.len() != values.len() {
                    return domain("tabulated symbol needs at least two nodes and matching values");
                }
                if radii.windows(2).any(|w| !(w[1] > w[0])) || radii[0] < S::zero() {
                    return domain("tabulated radii must be nonnegative and strictly increasing");
                }
                if radii.iter().any(|r| !r.is_finite()) || values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
                    return domain("tabulated symbol must be finite");
                }
            }
            Self::Product(parts) => {
                for p in parts {
                    p.validate()?;
                }
            }
        }
        Ok(())
    }

    /// Value at frequency modulus `r ≥ 0`.
    pub fn evaluate(&self, r: S) -> Complex<S> {
        match self {
            Self::Constant(c) => *c,
            Self::Resolvent { s, z } => (Complex::new(r.powf(*s), S::zero()) - z.value()).inv(),
            Self::ImagPart { s, delta } => {
                let a = r.powf(*s) - S::one();
                Complex::new(*delta / (a * a + *delta * *delta), S::zero())
            }
            Self::RadialCustom { radii, values } => {
                let last = radii.len() - 1;
                if r < radii[0] || r > radii[last] {
                    return Complex::new(S::zero(), S::zero());
                }
                let i = radii.partition_point(|&x| x <= r).clamp(1, last);
                let t = (r - radii[i - 1]) / (radii[i] - radii[i - 1]);
                values[i - 1] * (S::one() - t) + values[i] * t
            }
            Self::Product(parts) => parts
                .iter()
                .fold(Complex::new(S::one(), S::zero()), |acc, p| acc * p.evaluate(r)),
        }
    }

    /// `sup |m|` over all frequencies, when it has a simple closed form.
    pub fn sup_bound(&self) -> Option<S> {
        match self {
            Self::Constant(c) => Some(c.norm()),
            Self::Resolvent { z, .. } => Some(z.dist().recip()),
            Self::ImagPart { delta, .. } => Some(delta.abs().recip()),
            Self::RadialCustom { values, .. } => values.iter().map(|v| v.norm()).reduce(S::max),
            Self::Product(parts) => parts.iter().try_fold(S::one(), |acc, p| p.sup_bound().map(|b| acc * b)),
        }
    }
}

/// Multiplies a frequency-domain field by the symbol.
pub fn apply_symbol_hat<S: Scalar>(hat: &GridField<S>, symbol: &SymbolSpec<S>) -> Result<GridField<S>> {
    symbol.validate()?;
    if hat.domain() != Domain::Frequency {
        return domain("expected a frequency-domain field");
    }
    let g = hat.grid();
    let values: Vec<Complex<S>> = hat
        .values()
        .par_iter()
        .enumerate()
        .map(|(i, v)| *v * symbol.evaluate(g.frequency_norm(i)))
        .collect();
    GridField::new(hat.grid_arc().clone(), Domain::Frequency, values)
}

/// `F^{−1}[m(|ξ|) F f]`.
pub fn apply_symbol<S: Scalar>(field: &GridField<S>, symbol: &SymbolSpec<S>) -> Result<GridField<S>> {
    let hat = forward_transform(field)?;
    inverse_transform(&apply_symbol_hat(&hat, symbol)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use std::sync::Arc;

    #[test]
    fn constructors_validate() {
        assert!(SymbolSpec::<f64>::imag_part(2.0, 0.0).is_err());
        assert!(SymbolSpec::<f64>::imag_part(0.0, 0.1).is_err());
        let z = SpectralParameter::new(-1.0, 0.0).unwrap();
        assert!(SymbolSpec::resolvent(-2.0, z).is_err());
        assert!(SymbolSpec::radial_custom(vec![1.0, 0.5], vec![Complex::new(1.0, 0.0); 2]).is_err());
    }

    #[test]
    fn tabulated_interpolates() {
        let m = SymbolSpec::radial_custom(vec![0.0, 1.0, 3.0], vec![
            Complex::new(0.0, 0.0),
            Complex::new(2.0, 0.0),
            Complex::new(0.0, 4.0),
        ])
        .unwrap();
        assert_eq!(m.evaluate(0.5), Complex::new(1.0, 0.0));
        assert_eq!(m.evaluate(2.0), Complex::new(1.0, 2.0));
        assert_eq!(m.evaluate(3.5), Complex::new(0.0, 0.0));
    }

    #[test]
    fn single_mode_is_scaled() {
        let g = Arc::new(GridSpec::<f64>::cubic(1, 32, 8.0).unwrap());
        let k0 = 3.0 * std::f64::consts::TAU / 8.0;
        let f = GridField::from_fn(g, Domain::Space, |x| Complex::from_polar(1.0, k0 * x[0])).unwrap();
        let z = SpectralParameter::new(-1.0, 0.0).unwrap();
        let out = apply_symbol(&f, &SymbolSpec::resolvent(2.0, z).unwrap()).unwrap();
        let scale = 1.0 / (k0 * k0 + 1.0);
        for (a, b) in out.values().iter().zip(f.values()) {
            assert!((a - b * scale).norm() < 1e-13);
        }
    }
}
