//! `K_0` (real and complex argument) and `J_ν` for `ν ∈ [−1/2, 4]`.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// Regime switches for the two-regime evaluations.
#[derive(Clone, Copy, Debug)]
pub struct BesselRegimes {
    /// `|w|` at or below which `K_0` uses its power series.
    pub k0_series_max: f64,
    /// `r` at or below which `J_ν` uses its power series (raised to `2ν` when larger).
    pub j_series_max: f64,
    pub nu_min: f64,
    pub nu_max: f64,
}

pub const REGIMES: BesselRegimes = BesselRegimes { k0_series_max: 2.0, j_series_max: 16.0, nu_min: -0.5, nu_max: 4.0 };

fn k0_series<S: Scalar>(w: Complex<S>) -> Complex<S> {
    let quarter = S::lit(0.25);
    let t = w * w * quarter;
    let mut term = Complex::<S>::one();
    let mut i0 = Complex::<S>::one();
    let mut harmonic = S::zero();
    let mut tail = Complex::<S>::zero();
    for k in 1..200 {
        let kf = S::from_usize_lossy(k);
        term = term * t / (kf * kf);
        harmonic = harmonic + S::one() / kf;
        i0 = i0 + term;
        tail = tail + term * harmonic;
        if term.norm() <= S::epsilon() * S::lit(1e-3) * i0.norm() {
            break;
        }
    }
    let half = S::lit(0.5);
    -((w * half).ln() + S::euler_gamma()) * i0 + tail
}

/// Steed's continued fraction for `K_0`, valid for `Re w > 0`, used for `|w| > 2`.
fn k0_continued_fraction<S: Scalar>(w: Complex<S>) -> Result<Complex<S>> {
    let one = Complex::<S>::one();
    let two = S::lit(2.0);
    let a1 = S::lit(0.25);
    let mut b = (w + one) * two;
    let mut d = one / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = Complex::<S>::zero();
    let mut q2 = one;
    let mut q = Complex::new(a1, S::zero());
    let mut c = q;
    let mut a = -a1;
    let mut s = one + q * delh;
    let eps = S::epsilon();
    for i in 1..100_000usize {
        let fi = S::from_usize_lossy(i);
        a = a - two * fi;
        c = -c * a / (fi + S::one());
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q = q + c * qnew;
        b = b + Complex::new(two, S::zero());
        d = one / (b + d * a);
        delh = (b * d - one) * delh;
        h = h + delh;
        let dels = q * delh;
        s = s + dels;
        if dels.norm() < eps * s.norm() {
            let pi = S::PI();
            return Ok((Complex::new(pi, S::zero()) / (w * two)).sqrt() * (-w).exp() / s);
        }
    }
    let _ = h;
    Err(crate::Error::Quadrature { achieved: f64::NAN, requested: eps.as_f64() })
}

/// `K_0(w)` for complex `w` with `Re w > 0`.
pub fn bessel_k0_complex<S: Scalar>(w: Complex<S>) -> Result<Complex<S>> {
    if !(w.re > S::zero()) || !w.im.is_finite() {
        return domain(format!("K0 needs Re w > 0 (got {w})"));
    }
    if w.norm() <= S::lit(REGIMES.k0_series_max) {
        Ok(k0_series(w))
    } else {
        k0_continued_fraction(w)
    }
}

/// Modified Bessel function of the second kind, order zero, `w > 0`.
pub fn bessel_k0<S: Scalar>(w: S) -> Result<S> {
    if !(w > S::zero()) {
        return domain(format!("K0 needs w > 0 (got {w})"));
    }
    Ok(bessel_k0_complex(Complex::new(w, S::zero()))?.re)
}

fn check_order<S: Scalar>(nu: S) -> Result<()> {
    let v = nu.as_f64();
    if !(REGIMES.nu_min..=REGIMES.nu_max).contains(&v) {
        return domain(format!("Bessel order {v} outside the supported range [-1/2, 4]"));
    }
    Ok(())
}

fn j_series<S: Scalar>(nu: S, r: S) -> S {
    let half = r * S::lit(0.5);
    let g = S::lit(libm::tgamma(nu.as_f64() + 1.0));
    let mut term = half.powf(nu) / g;
    let mut sum = term;
    let h2 = half * half;
    for k in 1..400 {
        let kf = S::from_usize_lossy(k);
        term = -term * h2 / (kf * (kf + nu));
        sum = sum + term;
        if term.abs() <= S::epsilon() * S::lit(1e-3) * sum.abs().max(S::lit(1e-300).min(S::min_positive_value().sqrt())) && k > 2 {
            break;
        }
    }
    sum
}

/// Hankel's large-argument series `(P, Q)` for `J_ν(r) = √(2/πr)(P cos χ − Q sin χ)`.
fn hankel_pq<S: Scalar>(nu: S, r: S) -> (S, S) {
    let mu = S::lit(4.0) * nu * nu;
    let eight_r = S::lit(8.0) * r;
    let mut a = S::one();
    let mut p = S::one();
    let mut q = S::zero();
    let mut last = S::infinity();
    for k in 1..200usize {
        let odd = S::from_usize_lossy(2 * k - 1);
        a = a * (mu - odd * odd) / (S::from_usize_lossy(k) * eight_r);
        if a.is_zero() {
            break;
        }
        if a.abs() > last {
            break;
        }
        last = a.abs();
        let sign = if (k / 2) % 2 == 0 { S::one() } else { -S::one() };
        if k % 2 == 0 {
            p = p + sign * a;
        } else {
            q = q + sign * a;
        }
        if a.abs() < S::epsilon() * S::lit(1e-2) {
            break;
        }
    }
    (p, q)
}

fn phase<S: Scalar>(nu: S, r: S) -> S {
    r - (nu * S::lit(0.5) + S::lit(0.25)) * S::PI()
}

/// Leading term `(πr/2)^{−1/2} cos(r − πν/2 − π/4)`.
pub fn bessel_j_leading<S: Scalar>(nu: S, r: S) -> S {
    (S::FRAC_2_PI() / r).sqrt() * phase(nu, r).cos()
}

fn series_max<S: Scalar>(nu: S) -> S {
    S::lit(REGIMES.j_series_max).max(nu + nu)
}

/// Bessel function of the first kind `J_ν(r)`, `r > 0`, `ν ∈ [−1/2, 4]`.
pub fn bessel_j<S: Scalar>(nu: S, r: S) -> Result<S> {
    check_order(nu)?;
    if !(r > S::zero()) || !r.is_finite() {
        return domain(format!("J_nu needs r > 0 (got {r})"));
    }
    if r <= series_max(nu) {
        Ok(j_series(nu, r))
    } else {
        let (p, q) = hankel_pq(nu, r);
        let chi = phase(nu, r);
        Ok((S::FRAC_2_PI() / r).sqrt() * (p * chi.cos() - q * chi.sin()))
    }
}

/// `R_ν(r) = J_ν(r) − (πr/2)^{−1/2} cos(r − πν/2 − π/4)`.
///
/// In the asymptotic regime the remainder is formed from the Hankel series
/// directly, so no cancellation against the leading term occurs.
pub fn asymptotic_remainder<S: Scalar>(nu: S, r: S) -> Result<S> {
    let j = bessel_j(nu, r)?;
    if r <= series_max(nu) {
        Ok(j - bessel_j_leading(nu, r))
    } else {
        let (p, q) = hankel_pq(nu, r);
        let chi = phase(nu, r);
        Ok((S::FRAC_2_PI() / r).sqrt() * ((p - S::one()) * chi.cos() - q * chi.sin()))
    }
}
