use num_complex::Complex;

use super::bessel::bessel_k0_complex;
use crate::error::{domain, Result};
use crate::scalar::Scalar;
use crate::spectral::SpectralParameter;

/// `√z` with `Im √z > 0`, for `z ∉ [0, ∞)`.
pub fn sqrt_branch<S: Scalar>(z: Complex<S>) -> Result<Complex<S>> {
    Ok(SpectralParameter::from_complex(z)?.sqrt())
}

/// One-dimensional resolvent kernel `G_z(x) = (i / 2√z) e^{i√z|x|}`.
pub fn kernel_1d<S: Scalar>(z: Complex<S>, x: S) -> Result<Complex<S>> {
    let w = sqrt_branch(z)?;
    let i = Complex::<S>::i();
    let two = S::lit(2.0);
    Ok(i / (w * two) * (i * w * x.abs()).exp())
}

/// `‖G_z‖_{L^r}` in closed form, `r ∈ [1, ∞]`.
pub fn kernel_1d_norm<S: Scalar>(z: Complex<S>, r: S) -> Result<S> {
    if !(r >= S::one()) {
        return domain(format!("kernel norm needs r >= 1 (got {r})"));
    }
    let w = sqrt_branch(z)?;
    let amp = S::one() / (S::lit(2.0) * w.norm());
    if r.is_infinite() {
        return Ok(amp);
    }
    let a = w.im;
    Ok(amp * (S::lit(2.0) / (r * a)).powf(S::one() / r))
}

/// Young's bound `‖G_z‖_r`, `1/r = 1 + 1/q − 1/p`, for the `L^p → L^q` norm of
/// the one-dimensional resolvent. Infinite exponents are accepted.
pub fn young_upper_bound_1d<S: Scalar>(z: Complex<S>, p: S, q: S) -> Result<S> {
    if !(p >= S::one()) || !(q >= S::one()) {
        return domain("exponents must satisfy p, q >= 1");
    }
    let inv = |t: S| if t.is_infinite() { S::zero() } else { S::one() / t };
    let inv_r = S::one() + inv(q) - inv(p);
    if inv_r > S::one() {
        return domain(format!("p = {p} > q = {q}: Young's inequality does not apply"));
    }
    let r = if inv_r.is_zero() { S::infinity() } else { S::one() / inv_r };
    kernel_1d_norm(z, r)
}

/// Two-dimensional resolvent kernel `(2π)^{−1} K_0(√(−z) r)` with `√(−z) = −i√z`.
pub fn kernel_2d<S: Scalar>(z: Complex<S>, r: S) -> Result<Complex<S>> {
    if !(r > S::zero()) {
        return domain(format!("kernel_2d needs r > 0 (got {r})"));
    }
    let w = sqrt_branch(z)?;
    let minus_i = Complex::new(S::zero(), -S::one());
    let arg = minus_i * w * r;
    Ok(bessel_k0_complex(arg)? / S::TAU())
}
