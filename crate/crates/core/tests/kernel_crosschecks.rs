mod common;

use std::f64::consts::{PI, TAU};
use std::sync::Arc;

use common::rel_err;
use num_complex::Complex;
use proptest::prelude::*;
use sharp_resolvent::extremizers::{phi, spherical_constants};
use sharp_resolvent::grid::{apply_symbol, Axis, Domain, GridField, GridSpec, SymbolSpec};
use sharp_resolvent::harness::slope_fit;
use sharp_resolvent::kernels::*;
use sharp_resolvent::spectral::SpectralParameter;

fn quad() -> QuadConfig<f64> {
    QuadConfig { abs_tol: 1e-14, rel_tol: 1e-13, max_intervals: 100_000 }
}

/// `K_0(w) = ∫_0^∞ e^{−w cosh t} dt`, truncated where the integrand is below 1e−40.
fn k0_oracle(w: f64) -> f64 {
    let t_max = ((92.0 / w) + 1.0).acosh();
    let breaks: Vec<f64> = (0..=64).map(|i| t_max * i as f64 / 64.0).collect();
    integrate(|t: f64| (-w * t.cosh()).exp(), &breaks, &quad()).unwrap().value
}

/// `J_n(r) = (1/π) ∫_0^π cos(nτ − r sin τ) dτ` for integer `n`.
fn j_oracle(n: u32, r: f64) -> f64 {
    let pieces = 16 + (r as usize) * 2;
    let breaks: Vec<f64> = (0..=pieces).map(|i| PI * i as f64 / pieces as f64).collect();
    integrate(|t: f64| (n as f64 * t - r * t.sin()).cos(), &breaks, &quad()).unwrap().value / PI
}

#[test]
fn k0_matches_integral_representation_across_regimes() {
    let mut w = 0.01;
    while w < 40.0 {
        let got = bessel_k0(w).unwrap();
        assert!(rel_err(got, k0_oracle(w)) < 1e-10, "w = {w}");
        w *= 1.13;
    }
    let seam = REGIMES.k0_series_max;
    let (a, b) = (bessel_k0(seam * (1.0 - 1e-12)).unwrap(), bessel_k0(seam * (1.0 + 1e-12)).unwrap());
    assert!(rel_err(a, b) < 1e-9);
    let grid: Vec<f64> = (1..400).map(|i| i as f64 * 0.05).collect();
    assert!(grid.windows(2).all(|p| bessel_k0(p[1]).unwrap() < bessel_k0(p[0]).unwrap()));
}

#[test]
fn k0_logarithmic_limit() {
    let r4 = bessel_k0(1e-4).unwrap() / -(1e-4f64).ln();
    assert!((r4 - 1.0126).abs() < 1e-4, "{r4}");
    let r8 = bessel_k0(1e-8).unwrap() / -(1e-8f64).ln();
    assert!((r8 - 1.0).abs() < 0.02);
    for r in [1e-4f64, 1e-8, 1e-12] {
        let k = kernel_2d(Complex::new(-1.0, 0.0), r).unwrap();
        assert!((k.re / (-r.ln() / TAU) - 1.0).abs() < 0.1 / -r.log10());
    }
}

#[test]
fn bessel_j_matches_integral_and_closed_forms() {
    for n in 0..=3u32 {
        for i in 1..120 {
            let r = 0.37 * i as f64;
            let got = bessel_j(n as f64, r).unwrap();
            // the power series loses about five digits to cancellation just below the seam
            assert!((got - j_oracle(n, r)).abs() < 1e-10, "J_{n}({r}): {}", got - j_oracle(n, r));
        }
    }
    for i in 1..200 {
        let r = 0.25 * i as f64;
        let half = (2.0 / (PI * r)).sqrt();
        assert!((bessel_j(0.5, r).unwrap() - half * r.sin()).abs() < 1e-10);
        assert!((bessel_j(-0.5, r).unwrap() - half * r.cos()).abs() < 1e-10);
        assert!(asymptotic_remainder(0.5, r).unwrap().abs() < 1e-10);
    }
    let seam = REGIMES.j_series_max;
    for nu in [0.0f64, 0.5, 1.0] {
        let (a, b) = (bessel_j(nu, seam * (1.0 - 1e-13)).unwrap(), bessel_j(nu, seam * (1.0 + 1e-13)).unwrap());
        assert!((a - b).abs() < 1e-9 * a.abs().max(1e-3));
    }
    assert!((bessel_j(0.0, 1e-12f64).unwrap() - 1.0).abs() < 1e-15);
}

#[test]
fn remainder_decays_like_r_to_minus_three_halves() {
    let samples: Vec<f64> = (0..4000).map(|i| 10f64.powf(3.0 * i as f64 / 3999.0)).collect();
    let scaled = |nu: f64, lo: f64| {
        samples
            .iter()
            .filter(|&&r| r >= lo)
            .map(|&r| asymptotic_remainder(nu, r).unwrap().abs() * r.powf(1.5))
            .fold(0.0, f64::max)
    };
    for nu in [0.0, 1.0] {
        let c_all = scaled(nu, 1.0);
        let c_tail = scaled(nu, 300.0);
        // leading correction |4ν² − 1| / 8 · √(2/π)
        let predicted = (4.0 * nu * nu - 1.0).abs() / 8.0 * (2.0 / PI).sqrt();
        assert!(c_all < 0.5, "nu = {nu}: {c_all}");
        assert!(rel_err(c_tail, predicted) < 0.02, "nu = {nu}: {c_tail} vs {predicted}");
    }
}

#[test]
fn one_dimensional_multiplier_matches_convolution() {
    let n = 8192;
    let length = 128.0;
    let g = Arc::new(GridSpec::cubic(1, n, length).unwrap());
    let f = GridField::from_fn(g.clone(), Domain::Space, |x: [f64; 3]| Complex::new((-x[0] * x[0]).exp(), 0.0)).unwrap();
    let zs = [Complex::new(-1.0, 0.0), Complex::new(-4.0, 1.0), Complex::new(1.0, 1.0), Complex::new(2.0, 3.0), Complex::new(-0.25, 0.5)];
    for z in zs {
        let w = sqrt_branch(z).unwrap();
        assert!((-w.im * length / 2.0f64).exp() < 1e-10);
        let sym = SymbolSpec::resolvent(2.0, SpectralParameter::from_complex(z).unwrap()).unwrap();
        let u = apply_symbol(&f, &sym).unwrap();
        for x0 in [-2.0, -0.5, 0.0, 0.703125, 3.0] {
            let j = ((x0 + length / 2.0) * n as f64 / length) as usize;
            assert_eq!(g.axis(0).point(j), x0);
            let conv = integrate(
                |y: f64| kernel_1d(z, x0 - y).unwrap() * (-y * y).exp(),
                &[-9.0, x0, 9.0],
                &quad(),
            )
            .unwrap()
            .value;
            assert!((u.values()[j] - conv).norm() <= 1e-6 * conv.norm(), "z = {z}, x = {x0}");
        }
    }
}

#[test]
fn two_dimensional_kernel_matches_grid() {
    let (n, length, sigma) = (512, 40.0, 0.3);
    let g = Arc::new(GridSpec::cubic(2, n, length).unwrap());
    let gauss = move |x: f64, y: f64| (-(x * x + y * y) / (2.0 * sigma * sigma)).exp();
    let f = GridField::from_fn(g.clone(), Domain::Space, |x| Complex::new(gauss(x[0], x[1]), 0.0)).unwrap();
    let h = g.axis(0).spacing();
    for z in [Complex::new(-1.0, 0.0), Complex::new(-0.5, 2.0)] {
        let sym = SymbolSpec::resolvent(2.0, SpectralParameter::from_complex(z).unwrap()).unwrap();
        let u = apply_symbol(&f, &sym).unwrap();
        for (i, j) in [(288, 256), (256, 332), (320, 320)] {
            let x0 = [g.axis(0).point(i), g.axis(1).point(j)];
            let mut direct = Complex::new(0.0, 0.0);
            let reach = (2.2 / h) as isize;
            for a in -reach..=reach {
                for b in -reach..=reach {
                    let (y0, y1) = (a as f64 * h, b as f64 * h);
                    let r = ((x0[0] - y0).powi(2) + (x0[1] - y1).powi(2)).sqrt();
                    direct += kernel_2d(z, r).unwrap() * gauss(y0, y1);
                }
            }
            direct *= h * h;
            let grid_val = u.values()[g.ravel(&[i, j])];
            assert!((grid_val - direct).norm() <= 1e-4 * direct.norm(), "z = {z}: {grid_val} vs {direct}");
        }
        let conj = kernel_2d(z.conj(), 1.3).unwrap().conj();
        assert!((conj - kernel_2d(z, 1.3).unwrap()).norm() < 1e-15);
    }
}

#[test]
fn radial_transform_reduces_to_cosine_transform_in_one_dimension() {
    let profile_fn = |x: f64| phi((x - 1.25) / 0.75) * (1.0 + x * x);
    let profile = RadialProfile::analytic(0.5, 2.0, move |x: f64| Complex::new(profile_fn(x), 0.0)).unwrap();
    for r in [0.1, 1.0, 7.5, 40.0] {
        let q = radial_inverse_fourier(1, &profile, r, None).unwrap();
        let pieces = 8 + (r * 2.0) as usize;
        let breaks: Vec<f64> = (0..=pieces).map(|i| 0.5 + 1.5 * i as f64 / pieces as f64).collect();
        let direct = 2.0 * integrate(|x: f64| profile_fn(x) * (r * x).cos(), &breaks, &quad()).unwrap().value;
        assert!((q.re - direct).abs() < 1e-8, "r = {r}");
        assert!(q.im.abs() < 1e-15);
    }
    let sp = spherical_constants::<f64>(2, 2.0).unwrap();
    let out = spherical_output_profile(&sp, 1e-4).unwrap();
    assert_eq!(radial_inverse_fourier(2, &out, 3.0, None).unwrap().im, 0.0);
}

#[test]
fn kernel_norms_and_young_slopes() {
    for z in [Complex::new(-1.0, 0.0), Complex::new(1.0, 0.1), Complex::new(3.0, -2.0)] {
        let closed = kernel_1d_norm(z, 1.0).unwrap();
        let w = sqrt_branch(z).unwrap();
        let expected = 1.0 / (2.0 * w.norm()) * 2.0 / w.im;
        assert!(rel_err(closed, expected) < 1e-14);
        let reach = 60.0 / w.im;
        let quad_norm = 2.0 * integrate(|x: f64| kernel_1d(z, x).unwrap().norm(), &[0.0, reach], &quad()).unwrap().value;
        assert!(rel_err(quad_norm, closed) < 1e-10);
        assert!((kernel_1d(z, -0.7).unwrap() - kernel_1d(z, 0.7).unwrap()).norm() == 0.0);
        let inf = young_upper_bound_1d(z, 1.0, f64::INFINITY).unwrap();
        assert!(rel_err(inf, 0.5 / w.norm()) < 1e-15);
    }
    let yuk = kernel_1d(Complex::new(-1.0, 0.0), 0.8).unwrap();
    assert!((yuk - Complex::new(0.5 * (-0.8f64).exp(), 0.0)).norm() < 1e-15);

    let deltas: Vec<f64> = (3..=10).map(|k| 2f64.powi(-k)).collect();
    for (p, q) in [(2.0, 2.0), (1.0, 2.0), (4.0 / 3.0, 4.0), (1.0, f64::INFINITY), (2.0, 6.0)] {
        let pts: Vec<(f64, f64)> =
            deltas.iter().map(|&d| (d, young_upper_bound_1d(Complex::new(1.0, d), p, q).unwrap())).collect();
        let inv = |t: f64| if t.is_infinite() { 0.0 } else { 1.0 / t };
        let expected = -(1.0 - inv(p) + inv(q));
        let fit = slope_fit(&pts).unwrap();
        assert!((fit.slope - expected).abs() < 0.02, "(p, q) = ({p}, {q}): {}", fit.slope);
    }
    assert!(young_upper_bound_1d(Complex::new(-1.0, 0.0), 3.0, 2.0).is_err());
}

#[test]
fn spherical_concentration_integral() {
    for s in [1.0, 1.5, 2.0, 3.0] {
        let sp = spherical_constants::<f64>(2, s).unwrap();
        let delta = 1e-5;
        let bound = s * sp.lambda * delta;
        let grade: Vec<f64> = (-20..=20).map(|k| bound * (k as f64) / 20.0).collect();
        let val = integrate(|p: f64| delta / (p * p + delta * delta) / s, &grade, &quad()).unwrap().value;
        assert!(rel_err(val, sp.concentration() / s) < 1e-8);
    }
}

#[test]
fn splitting_identity_and_bounds_over_the_shell() {
    let sp = spherical_constants::<f64>(3, 2.0).unwrap();
    let delta = 2f64.powi(-21);
    let (lo, hi) = sp.shell(delta);
    for i in 0..=12 {
        let r = lo + (hi - lo) * i as f64 / 12.0;
        let parts = q_decomposition(&sp, delta, r).unwrap();
        assert!(parts.sum_defect() < 1e-9, "{parts:?}");
        assert!(parts.i1 >= parts.i1_lower);
        assert!(parts.i2.abs() <= parts.i2_upper);
    }
}

proptest! {
    #[test]
    fn branch_sqrt(re in -1e3f64..1e3, im in -1e3f64..1e3) {
        prop_assume!(!(im == 0.0 && re >= 0.0));
        let z = Complex::new(re, im);
        let w = sqrt_branch(z).unwrap();
        prop_assert!(w.im > 0.0);
        prop_assert!((w * w - z).norm() <= 1e-14 * z.norm().max(1e-300) * 4.0);
    }

    #[test]
    fn branch_is_continuous_across_the_negative_axis(re in -100.0f64..-1e-3, eps in 1e-14f64..1e-9) {
        let up = sqrt_branch(Complex::new(re, eps)).unwrap();
        let down = sqrt_branch(Complex::new(re, -eps)).unwrap();
        prop_assert!((up - down).norm() < 1e-6 * up.norm());
    }
}

#[test]
fn single_precision_kernels() {
    let k: f32 = bessel_k0(1.0f32).unwrap();
    assert!((k - 0.421_024_4).abs() < 1e-5);
    let j: f32 = bessel_j(0.0f32, 30.0).unwrap();
    assert!((j + 0.086_368).abs() < 1e-5);
    let _ = Axis::<f32>::new(8, 1.0);
}
