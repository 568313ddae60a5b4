//! Radial inverse Fourier transforms and the near-field/far-field splitting of
//! the spherical test output.
//!
//! Convention: `Q(x) = ∫ g(|ξ|) e^{ix·ξ} dξ`, which for radial `g` reduces to
//! `Q(r) = (2π)^{d/2} r^{(2−d)/2} ∫ g(ρ) ρ^{d/2} J_{(d−2)/2}(ρr) dρ`.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;
use serde::Serialize;

use super::bessel::{asymptotic_remainder, bessel_j};
use super::quadrature::{integrate, QuadConfig};
use crate::error::{domain, Result};
use crate::extremizers::{spherical_profile_hat, SphericalSpec};
use crate::scalar::Scalar;

type RadialFn<S> = Arc<dyn Fn(S) -> Complex<S> + Send + Sync>;

#[derive(Clone)]
enum Kind<S: Scalar> {
    Tabulated { mesh: Vec<S>, values: Vec<Complex<S>> },
    Analytic { f: RadialFn<S> },
}

/// A radial function `g(ρ)` supported in a bounded interval of `[0, ∞)`.
///
/// Either tabulated (piecewise linear through the nodes) or given by a closure.
/// Narrow features can be declared with [`RadialProfile::with_peak`] so the
/// quadrature mesh is graded towards them.
#[derive(Clone)]
pub struct RadialProfile<S: Scalar> {
    kind: Kind<S>,
    support: (S, S),
    peaks: Vec<(S, S)>,
}

impl<S: Scalar> fmt::Debug for RadialProfile<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.kind {
            Kind::Tabulated { mesh, .. } => format!("tabulated({} nodes)", mesh.len()),
            Kind::Analytic { .. } => "analytic".to_string(),
        };
        f.debug_struct("RadialProfile")
            .field("kind", &kind)
            .field("support", &self.support)
            .field("peaks", &self.peaks)
            .finish()
    }
}

impl<S: Scalar> RadialProfile<S> {
    pub fn tabulated(mesh: Vec<S>, values: Vec<Complex<S>>) -> Result<Self> {
        if mesh.len() < 2 || mesh.len() != values.len() {
            return domain("tabulated profile needs at least two nodes and matching values");
        }
        if mesh[0] < S::zero() || mesh.windows(2).any(|w| !(w[1] > w[0])) {
            return domain("profile mesh must be nonnegative and strictly increasing");
        }
        if mesh.iter().any(|m| !m.is_finite()) || values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return domain("profile values must be finite");
        }
        let support = (mesh[0], mesh[mesh.len() - 1]);
        Ok(Self { kind: Kind::Tabulated { mesh, values }, support, peaks: Vec::new() })
    }

    /// `f` is only evaluated inside `[a, b]`.
    pub fn analytic<F>(a: S, b: S, f: F) -> Result<Self>
    where
        F: Fn(S) -> Complex<S> + Send + Sync + 'static,
    {
        if !(a >= S::zero() && b > a && b.is_finite()) {
            return domain(format!("profile support [{a}, {b}] must be a bounded interval in [0, inf)"));
        }
        Ok(Self { kind: Kind::Analytic { f: Arc::new(f) }, support: (a, b), peaks: Vec::new() })
    }

    /// Declares a feature of width `width` centred at `centre`.
    pub fn with_peak(mut self, centre: S, width: S) -> Self {
        if width > S::zero() {
            self.peaks.push((centre, width));
        }
        self
    }

    pub fn support(&self) -> (S, S) {
        self.support
    }

    pub fn evaluate(&self, rho: S) -> Complex<S> {
        let (a, b) = self.support;
        if rho < a || rho > b {
            return Complex::new(S::zero(), S::zero());
        }
        match &self.kind {
            Kind::Analytic { f } => f(rho),
            Kind::Tabulated { mesh, values } => {
                let last = mesh.len() - 1;
                let i = mesh.partition_point(|&x| x <= rho).clamp(1, last);
                let t = (rho - mesh[i - 1]) / (mesh[i] - mesh[i - 1]);
                values[i - 1] * (S::one() - t) + values[i] * t
            }
        }
    }

    /// Breakpoints: support ends, graded points around each peak, table nodes,
    /// and a split every `π/r` so no piece holds more than half an oscillation.
    pub fn breakpoints(&self, r: S) -> Vec<S> {
        let (a, b) = self.support;
        let mut pts = vec![a, b];
        if let Kind::Tabulated { mesh, .. } = &self.kind {
            pts.extend_from_slice(mesh);
        }
        for &(c, w) in &self.peaks {
            pts.push(c);
            let mut h = w;
            while h < b - a {
                pts.push(c - h);
                pts.push(c + h);
                h = h + h;
            }
        }
        pts.retain(|p| *p >= a && *p <= b);
        pts.sort_by(|x, y| x.partial_cmp(y).expect("finite breakpoints"));
        pts.dedup();
        let step = S::PI() / r;
        let mut out = Vec::with_capacity(pts.len());
        for w in pts.windows(2) {
            out.push(w[0]);
            let pieces = ((w[1] - w[0]) / step).ceil().to_usize().unwrap_or(1).clamp(1, 1 << 16);
            for k in 1..pieces {
                out.push(w[0] + (w[1] - w[0]) * S::from_usize_lossy(k) / S::from_usize_lossy(pieces));
            }
        }
        out.push(b);
        out
    }

    /// `∫ |g|`, estimated on the breakpoint mesh; used to scale tolerances.
    pub fn mass(&self) -> S {
        let breaks = self.breakpoints(S::one());
        integrate(|x: S| self.evaluate(x).norm(), &breaks, &QuadConfig { max_intervals: 4096, ..QuadConfig::default() })
            .map(|r| r.value)
            .unwrap_or_else(|_| S::one())
    }
}

fn default_config<S: Scalar>(mass: S) -> QuadConfig<S> {
    let eps = S::epsilon() * S::lit(1e3);
    QuadConfig {
        abs_tol: S::lit(1e-9).max(eps) * mass.max(S::min_positive_value()),
        rel_tol: S::lit(1e-10).max(eps),
        max_intervals: 400_000,
    }
}

fn check_dim<S: Scalar>(d: usize, r: S) -> Result<S> {
    if d == 0 || d > 10 {
        return domain(format!("radial transform supports 1 <= d <= 10 (got {d})"));
    }
    if !(r > S::zero()) || !r.is_finite() {
        return domain(format!("radial transform needs r > 0 (got {r})"));
    }
    Ok((S::from_usize_lossy(d) - S::lit(2.0)) * S::lit(0.5))
}

/// `Q(r)` for `d ≥ 1`; `cfg = None` uses an absolute tolerance of `1e−9 ∫|g|`.
pub fn radial_inverse_fourier<S: Scalar>(
    d: usize,
    profile: &RadialProfile<S>,
    r: S,
    cfg: Option<QuadConfig<S>>,
) -> Result<Complex<S>> {
    let nu = check_dim(d, r)?;
    let cfg = cfg.unwrap_or_else(|| default_config(profile.mass()));
    let half_d = S::from_usize_lossy(d) * S::lit(0.5);
    // ρr > 0 at every interior node and ν was range-checked above.
    let res = integrate(
        |rho: S| profile.evaluate(rho) * (rho.powf(half_d) * bessel_j(nu, rho * r).unwrap_or(S::zero())),
        &profile.breakpoints(r),
        &cfg,
    )?;
    let pref = S::TAU().powf(half_d) * r.powf(-nu);
    Ok(res.value * pref)
}

/// Pieces of the splitting `Q = Q1 − Q2 + Q3` at one radius.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct QParts<S: Scalar> {
    pub r: S,
    pub q: S,
    pub q1: S,
    pub q2: S,
    pub q3: S,
    /// Cosine integral over `|ρ^s − 1| ≤ sλδ`.
    pub i1: S,
    /// Cosine integral over the rest of the support.
    pub i2: S,
    /// `(99/(100s)) · 2 arctan(sλ)`.
    pub i1_lower: S,
    /// `(2/s)(π − 2 arctan(sλ))`.
    pub i2_upper: S,
}

impl<S: Scalar> QParts<S> {
    pub const CSV_HEADER: &'static str = "r,Q,Q1,Q2,Q3";

    pub fn csv_row(&self) -> String {
        format!("{},{},{},{},{}", self.r, self.q, self.q1, self.q2, self.q3)
    }

    /// `|Q − (Q1 − Q2 + Q3)|`.
    pub fn sum_defect(&self) -> S {
        (self.q - (self.q1 - self.q2 + self.q3)).abs()
    }
}

/// The spherical output `m_δ φ` as a radial profile, with its peak declared.
pub fn spherical_output_profile<S: Scalar>(spec: &SphericalSpec<S>, delta: S) -> Result<RadialProfile<S>> {
    let hat = spherical_profile_hat(spec);
    let s = spec.s;
    let (a, b) = hat.support();
    Ok(RadialProfile::analytic(a, b, move |rho: S| {
        let t = rho.powf(s) - S::one();
        Complex::new(hat.evaluate(rho) * delta / (t * t + delta * delta), S::zero())
    })?
    .with_peak(S::one(), delta / s))
}

/// Evaluates `Q`, `Q1`, `Q2`, `Q3`, `I1`, `I2` at `r` in the shell `[μ/(4δ), μ/(2δ)]`.
pub fn q_decomposition<S: Scalar>(spec: &SphericalSpec<S>, delta: S, r: S) -> Result<QParts<S>> {
    if !(delta > S::zero() && delta <= spec.max_delta()) {
        return domain(format!("delta = {delta} must lie in (0, {}]", spec.max_delta()));
    }
    let (lo, hi) = spec.shell(delta);
    if !(r >= lo && r <= hi) {
        return domain(format!("r = {r} lies outside the shell [{lo}, {hi}]"));
    }
    let d = spec.d;
    let s = spec.s;
    let nu = check_dim(d, r)?;
    let profile = spherical_output_profile(spec, delta)?;
    let cfg = default_config(profile.mass());
    let g = |rho: S| profile.evaluate(rho).re;
    let half = S::lit(0.5);
    let dm1 = S::from_usize_lossy(d - 1);
    let w = dm1 * half;

    let q = radial_inverse_fourier(d, &profile, r, Some(cfg))?.re;

    // Inner window |ρ^s − 1| ≤ sλδ, kept as breakpoints.
    let sld = s * spec.lambda * delta;
    let rho_minus = (S::one() - sld).powf(s.recip());
    let rho_plus = (S::one() + sld).powf(s.recip());
    let breaks = profile.breakpoints(r);
    let inside: Vec<S> = std::iter::once(rho_minus)
        .chain(breaks.iter().copied().filter(|&x| x > rho_minus && x < rho_plus))
        .chain(std::iter::once(rho_plus))
        .collect();
    let left: Vec<S> = breaks.iter().copied().filter(|&x| x < rho_minus).chain(std::iter::once(rho_minus)).collect();
    let right: Vec<S> = std::iter::once(rho_plus).chain(breaks.iter().copied().filter(|&x| x > rho_plus)).collect();

    let cos_part = |rho: S| g(rho) * rho.powf(w) * ((rho - S::one()) * r).cos();
    let sin_part = |rho: S| g(rho) * rho.powf(w) * ((rho - S::one()) * r).sin();
    let i1 = integrate(cos_part, &inside, &cfg)?.value;
    let i2 = integrate(cos_part, &left, &cfg)?.value + integrate(cos_part, &right, &cfg)?.value;
    let sn = integrate(sin_part, &breaks, &cfg)?.value;

    let amp = S::lit(2.0) * S::TAU().powf(w) * r.powf(-w);
    let chi = r - S::PI() * dm1 * S::lit(0.25);
    let q1 = amp * chi.cos() * (i1 + i2);
    let q2 = amp * chi.sin() * sn;

    let half_d = S::from_usize_lossy(d) * half;
    let q3 = integrate(
        |rho: S| {
            let x = rho * r;
            let rem = asymptotic_remainder(nu, x).unwrap_or(S::zero());
            g(rho) * rho.powf(dm1) * x.powf(-nu) * rem
        },
        &breaks,
        &cfg,
    )?
    .value
        * S::TAU().powf(half_d);

    let k = spec.concentration();
    Ok(QParts {
        r,
        q,
        q1,
        q2,
        q3,
        i1,
        i2,
        i1_lower: S::lit(0.99) / s * k,
        i2_upper: S::lit(2.0) / s * (S::PI() - k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremizers::spherical_constants;

    #[test]
    fn gaussian_in_three_dimensions() {
        // ∫ e^{−|ξ|²/2} e^{ix·ξ} dξ = (2π)^{3/2} e^{−r²/2}; truncate at ρ = 12.
        let p = RadialProfile::analytic(0.0, 12.0, |x: f64| Complex::new((-0.5 * x * x).exp(), 0.0)).unwrap();
        for &r in &[0.3, 1.0, 2.5] {
            let q = radial_inverse_fourier(3, &p, r, None).unwrap();
            let exact = std::f64::consts::TAU.powf(1.5) * (-0.5 * r * r).exp();
            assert!((q.re - exact).abs() < 1e-8, "r = {r}: {} vs {exact}", q.re);
            assert!(q.im.abs() < 1e-15);
        }
    }

    #[test]
    fn tabulated_matches_analytic_on_linear_data() {
        let mesh: Vec<f64> = (0..=20).map(|i| 0.5 + i as f64 * 0.05).collect();
        let vals: Vec<Complex<f64>> = mesh.iter().map(|&m| Complex::new(1.5 - m, 0.0)).collect();
        let t = RadialProfile::tabulated(mesh, vals).unwrap();
        let a = RadialProfile::analytic(0.5, 1.5, |m: f64| Complex::new(1.5 - m, 0.0)).unwrap();
        let (x, y) = (radial_inverse_fourier(2, &t, 7.0, None).unwrap(), radial_inverse_fourier(2, &a, 7.0, None).unwrap());
        assert!((x - y).norm() < 1e-10);
    }

    #[test]
    fn splitting_adds_up() {
        let sp = spherical_constants::<f64>(2, 2.0).unwrap();
        let delta = 2f64.powi(-20);
        let (lo, hi) = sp.shell(delta);
        for &r in &[lo, 0.5 * (lo + hi), hi] {
            let parts = q_decomposition(&sp, delta, r).unwrap();
            assert!(parts.sum_defect() < 1e-7 * (1.0 + parts.q.abs()), "{parts:?}");
            assert!(parts.i1 >= parts.i1_lower);
            assert!(parts.i2.abs() <= parts.i2_upper);
        }
        assert!(q_decomposition(&sp, delta, 0.5 * lo).is_err());
    }
}
