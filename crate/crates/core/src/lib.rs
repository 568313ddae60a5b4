#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]
//! Sharp `L^p`–`L^q` resolvent bounds for the Laplacian and its fractional powers,
//! as numbers you can compute.
//!
//! The crate is split along the lines of the problem:
//!
//! * [`atlas`]: exact-rational geometry of the `(1/p, 1/q)` square (exponents
//!   `γ`, `ω`, named points, region classification).
//! * [`spectral`]: the spectral-parameter side (`κ`, the regions `Z(ℓ)`, their
//!   shapes and boundaries, eigenvalue enclosures).
//! * [`grid`]: periodic-grid Fourier multipliers and discrete Lebesgue/Lorentz norms.
//! * [`extremizers`]: the Knapp and spherical test functions with all constants resolved.
//! * [`kernels`]: closed-form kernels, Bessel functions and radial quadrature.
//! * [`harness`]: sweeps, slope fits, eigenvalue demos and figure data used by the CLI.
//!
//! Numerical code is generic over [`Scalar`] (`f32`/`f64`); the exponent geometry is
//! generic over the integer type backing its rationals. The aliases below fix the
//! common choices.

pub mod atlas;
pub mod error;
pub mod extremizers;
pub mod grid;
pub mod harness;
pub mod kernels;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rational used for exponent geometry.
pub type Rational = num_rational::Ratio<i64>;
/// Arbitrary-precision rational, for lattices whose products overflow `i64`.
pub type BigRational = num_rational::BigRational;
/// Exponent pair over `i64` rationals.
pub type Pair = atlas::ExponentPair<i64>;
/// Complex number in the default precision.
pub type Complex = num_complex::Complex<f64>;

pub type Spectral = spectral::SpectralParameter<f64>;
pub type Query = spectral::RegionQuery<f64>;
pub type Field = grid::GridField<f64>;
pub type Grid = grid::GridSpec<f64>;
pub type Symbol = grid::SymbolSpec<f64>;
pub type Profile = kernels::RadialProfile<f64>;

pub type Field32 = grid::GridField<f32>;
pub type Query32 = spectral::RegionQuery<f32>;
