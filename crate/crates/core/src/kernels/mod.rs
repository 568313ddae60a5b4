//! Closed-form kernels, Bessel functions, and radial Fourier inversion.

mod bessel;
mod green;
mod quadrature;
mod radial;

pub use bessel::{asymptotic_remainder, bessel_j, bessel_j_leading, bessel_k0, bessel_k0_complex, BesselRegimes, REGIMES};
pub use green::{kernel_1d, kernel_1d_norm, kernel_2d, sqrt_branch, young_upper_bound_1d};
pub use quadrature::{gauss_legendre3, integrate, QuadConfig, QuadResult, QuadValue};
pub use radial::{q_decomposition, radial_inverse_fourier, spherical_output_profile, QParts, RadialProfile};
