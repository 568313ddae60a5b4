use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::RegionQuery;
use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// Closed axis-aligned rectangle of the complex plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Window<S> {
    pub re_min: S,
    pub re_max: S,
    pub im_min: S,
    pub im_max: S,
}

impl<S: Scalar> Window<S> {
    pub fn new(re_min: S, re_max: S, im_min: S, im_max: S) -> Result<Self> {
        if !(re_min < re_max) || !(im_min < im_max) {
            return domain("degenerate window");
        }
        Ok(Self { re_min, re_max, im_min, im_max })
    }

    /// `[-r, r] × [-r, r]`.
    pub fn square(r: S) -> Result<Self> {
        Self::new(-r, r, -r, r)
    }

    pub fn contains(&self, z: Complex<S>) -> bool {
        self.re_min <= z.re && z.re <= self.re_max && self.im_min <= z.im && z.im <= self.im_max
    }
}

/// Ordered samples of `∂Z(ℓ)` inside a window.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BoundaryPolyline<S: Scalar> {
    pub points: Vec<Complex<S>>,
}

impl<S: Scalar> BoundaryPolyline<S> {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("re,im\n");
        for p in &self.points {
            out.push_str(&format!("{},{}\n", p.re, p.im));
        }
        out
    }
}

/// Solves `ℓ y^γ = (x² + y²)^{(γ−ω)/2}` for `y > 0` at abscissa `x > 0`.
///
/// The left side minus the right is increasing in `y`, so the root is unique.
fn solve_height<S: Scalar>(x: S, ell: S, g: S, w: S) -> Option<S> {
    let half = S::lit(0.5);
    let h = |y: S| ell.ln() + g * y.ln() - (g - w) * half * (x * x + y * y).ln();
    let mut lo = x * S::lit(1e-3);
    let mut hi = x.max(S::one());
    let mut guard = 0;
    while h(lo) > S::zero() {
        lo = lo * S::lit(1e-3);
        guard += 1;
        if guard > 200 || lo.is_zero() {
            return None;
        }
    }
    guard = 0;
    while h(hi) < S::zero() {
        hi = hi * S::lit(4.0);
        guard += 1;
        if guard > 400 || !hi.is_finite() {
            return None;
        }
    }
    let tol = S::lit(1e-12).max(S::epsilon() * S::lit(4.0));
    for _ in 0..400 {
        let mid = (lo * hi).sqrt();
        if h(mid) < S::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= tol * hi {
            break;
        }
    }
    Some((lo * hi).sqrt())
}

/// Samples `∂Z(ℓ)` with `n` points per piece and clips the result to `window`.
///
/// The curve is traced in one direction: the upper branch over `Re z > 0` from
/// right to left, the arc `|z| = ℓ^{−1/ω}` through the left half-plane, then the
/// lower branch back out. Empty and full regions have no boundary.
pub fn boundary_sample<S: Scalar>(query: &RegionQuery<S>, window: &Window<S>, n: usize) -> Result<Vec<BoundaryPolyline<S>>> {
    if n < 2 {
        return domain("boundary sampling needs n >= 2");
    }
    let g = query.gamma_f();
    let w = query.omega_f();
    let ell = query.ell;
    let one = S::one();
    let pi = S::PI();
    let half_pi = S::FRAC_PI_2();
    let step = |k: usize, m: usize| S::from_usize_lossy(k) / S::from_usize_lossy(m);

    let curve: Vec<Complex<S>> = if query.omega().is_zero() {
        if ell < one || query.gamma().is_zero() {
            return Ok(Vec::new());
        }
        if ell == one {
            // the imaginary axis without the origin
            let top = window.im_max.max(S::zero());
            let bottom = window.im_min.min(S::zero());
            let upper: Vec<_> = (0..n).map(|k| Complex::new(S::zero(), top * (one - step(k, n)))).filter(|z| !z.im.is_zero()).collect();
            let lower: Vec<_> = (1..=n).map(|k| Complex::new(S::zero(), bottom * step(k, n))).collect();
            return Ok(clip(&upper, window).into_iter().chain(clip(&lower, window)).collect());
        }
        let slope = ell.powf(-one / g).asin().tan();
        let xmax = window.re_max.max(S::zero());
        let mut c: Vec<_> = (0..n).map(|k| {
            let x = xmax * (one - step(k, n - 1));
            Complex::new(x, slope * x)
        }).collect();
        let lower: Vec<_> = c.iter().rev().skip(1).map(|z| z.conj()).collect();
        c.extend(lower);
        c
    } else {
        let radius = ell.powf(-one / w);
        if query.gamma().is_zero() {
            let two_pi = S::TAU();
            (0..n)
                .map(|k| {
                    let t = two_pi * (S::from_usize_lossy(k) + S::lit(0.5)) / S::from_usize_lossy(n);
                    Complex::from_polar(radius, t)
                })
                .collect()
        } else {
            let xmax = window.re_max;
            let upper: Vec<Complex<S>> = if xmax > S::zero() {
                (0..n)
                    .into_par_iter()
                    .filter_map(|k| {
                        let x = xmax * (one - step(k, n));
                        solve_height(x, ell, g, w).map(|y| Complex::new(x, y))
                    })
                    .collect()
            } else {
                Vec::new()
            };
            let arc = (0..=n).map(|k| Complex::from_polar(radius, half_pi + pi * step(k, n)));
            let lower: Vec<Complex<S>> = upper.iter().rev().map(|z| z.conj()).collect();
            upper.iter().copied().chain(arc).chain(lower).collect()
        }
    };
    Ok(clip(&curve, window))
}

fn clip<S: Scalar>(curve: &[Complex<S>], window: &Window<S>) -> Vec<BoundaryPolyline<S>> {
    let mut out = Vec::new();
    let mut run = Vec::new();
    for &z in curve {
        if window.contains(z) {
            run.push(z);
        } else if !run.is_empty() {
            out.push(BoundaryPolyline { points: std::mem::take(&mut run) });
        }
    }
    if !run.is_empty() {
        out.push(BoundaryPolyline { points: run });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{kappa, SpectralParameter};
    use crate::Pair;

    fn q(d: u32, xn: i64, xd: i64, yn: i64, yd: i64, ell: f64) -> RegionQuery<f64> {
        RegionQuery::laplacian(d, Pair::from_fractions(xn, xd, yn, yd).unwrap(), ell).unwrap()
    }

    #[test]
    fn h_boundary_is_strip_and_circle() {
        let win = Window::square(4.0).unwrap();
        let lines = boundary_sample(&q(3, 1, 2, 1, 2, 1.0), &win, 64).unwrap();
        assert_eq!(lines.len(), 1);
        for p in &lines[0].points {
            if p.re > 0.0 {
                assert!((p.im.abs() - 1.0).abs() < 1e-9, "{p}");
            } else {
                assert!((p.norm() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn points_satisfy_kappa_equals_ell() {
        let win = Window::new(-3.0, 50.0, -20.0, 20.0).unwrap();
        for query in [q(3, 1, 2, 1, 6, 2.0), q(3, 2, 5, 1, 5, 1.5), q(2, 2, 5, 0, 1, 0.7), q(4, 1, 2, 0, 1, 2.0)] {
            for line in boundary_sample(&query, &win, 50).unwrap() {
                for p in &line.points {
                    if p.norm() < 1e-12 {
                        continue;
                    }
                    let z = SpectralParameter::new(p.re, p.im).unwrap();
                    let k = kappa(&query, &z);
                    assert!((k - query.ell).abs() <= 1e-8 * query.ell, "{p}: {k}");
                }
            }
        }
    }

    #[test]
    fn disk_complement_boundary_is_a_circle() {
        let query = q(3, 3, 4, 1, 4, 2.0);
        assert!(query.gamma().is_zero());
        let win = Window::square(100.0).unwrap();
        let lines = boundary_sample(&query, &win, 40).unwrap();
        let r = 2f64.powf(-4.0);
        for p in &lines[0].points {
            assert!((p.norm() - r).abs() < 1e-12);
        }
    }

    #[test]
    fn full_region_has_no_boundary() {
        let win = Window::square(4.0).unwrap();
        assert!(boundary_sample(&q(3, 5, 6, 1, 6, 1.0), &win, 16).unwrap().is_empty());
        assert!(boundary_sample(&q(3, 5, 6, 1, 6, 1.0), &win, 1).is_err());
    }

    #[test]
    fn csv_header() {
        let l = BoundaryPolyline { points: vec![Complex::new(1.0f64, 2.0)] };
        assert_eq!(l.to_csv(), "re,im\n1,2\n");
    }
}
