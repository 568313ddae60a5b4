use std::sync::Arc;

use num_complex::Complex;
use rayon::prelude::*;
use rustfft::{Fft, FftDirection, FftPlanner};

use super::field::{Axis, Domain, GridField, GridSpec};
use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// `F[k] = h^d Σ_x f(x) e^{−i x·ξ_k}`.
pub fn forward_transform<S: Scalar>(field: &GridField<S>) -> Result<GridField<S>> {
    if field.domain() != Domain::Space {
        return domain("forward transform expects a space-domain field");
    }
    let mut values = field.values().to_vec();
    let grid = field.grid_arc().clone();
    for axis in 0..grid.d() {
        run_axis(&grid, axis, &mut values, FftDirection::Forward);
    }
    Ok(GridField::from_parts_unchecked(grid, Domain::Frequency, values))
}

/// Exact inverse of [`forward_transform`]: `f(x) = L^{−d} Σ_k F[k] e^{i x·ξ_k}`.
pub fn inverse_transform<S: Scalar>(field: &GridField<S>) -> Result<GridField<S>> {
    if field.domain() != Domain::Frequency {
        return domain("inverse transform expects a frequency-domain field");
    }
    let mut values = field.values().to_vec();
    let grid = field.grid_arc().clone();
    for axis in 0..grid.d() {
        run_axis(&grid, axis, &mut values, FftDirection::Inverse);
    }
    Ok(GridField::from_parts_unchecked(grid, Domain::Space, values))
}

/// Evaluates `L^{−d} Σ_k F[k] e^{i x·ξ_k}` at an arbitrary point `x`.
pub fn evaluate_at<S: Scalar>(hat: &GridField<S>, x: &[S]) -> Result<Complex<S>> {
    if hat.domain() != Domain::Frequency {
        return domain("pointwise evaluation expects a frequency-domain field");
    }
    let g = hat.grid();
    if x.len() != g.d() {
        return domain(format!("point has {} coordinates, grid has {}", x.len(), g.d()));
    }
    let volume = g.axes().iter().fold(S::one(), |acc, a| acc * a.length);
    let sum = hat
        .values()
        .par_iter()
        .enumerate()
        .filter(|(_, v)| !(v.re.is_zero() && v.im.is_zero()))
        .map(|(i, v)| {
            let xi = g.frequency(i);
            let phase = x.iter().zip(&xi).fold(S::zero(), |acc, (a, b)| acc + *a * *b);
            *v * Complex::from_polar(S::one(), phase)
        })
        .reduce(|| Complex::new(S::zero(), S::zero()), |a, b| a + b);
    Ok(sum / volume)
}

fn sign<S: Scalar>(j: usize) -> S {
    if j.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

/// Per-sample factors applied before and after the raw FFT along one axis.
///
/// With `x_j = −L/2 + jh` and `ξ_m = c + 2π(m − n/2)/L` (n/2 even):
/// forward pre `(−1)^j e^{−ijhc}`, post `h e^{iLc/2} (−1)^m`;
/// inverse pre `(−1)^m`, post `L^{−1} e^{−iLc/2} (−1)^j e^{ijhc}`.
fn twiddles<S: Scalar>(a: &Axis<S>, dir: FftDirection) -> (Vec<Complex<S>>, Vec<Complex<S>>) {
    let h = a.spacing();
    let half_phase = a.length * a.carrier * S::lit(0.5);
    let chirp: Vec<Complex<S>> = (0..a.n)
        .map(|j| Complex::from_polar(sign::<S>(j), -S::from_usize_lossy(j) * h * a.carrier))
        .collect();
    let alt: Vec<Complex<S>> = (0..a.n).map(|m| Complex::new(sign::<S>(m), S::zero())).collect();
    match dir {
        FftDirection::Forward => {
            let post = Complex::from_polar(h, half_phase);
            (chirp, alt.into_iter().map(|v| v * post).collect())
        }
        FftDirection::Inverse => {
            let post = Complex::from_polar(a.length.recip(), -half_phase);
            (alt, chirp.into_iter().map(|v| v.conj() * post).collect())
        }
    }
}

fn run_axis<S: Scalar>(grid: &GridSpec<S>, axis: usize, values: &mut [Complex<S>], dir: FftDirection) {
    let a = grid.axis(axis);
    let n = a.n;
    let stride: usize = grid.axes()[axis + 1..].iter().map(|a| a.n).product();
    let lanes = values.len() / n;
    let fft: Arc<dyn Fft<S>> = FftPlanner::new().plan_fft(n, dir);
    let (pre, post) = twiddles(a, dir);
    let lane_start = |l: usize| (l / stride) * stride * n + l % stride;

    let processed: Vec<Vec<Complex<S>>> = (0..lanes)
        .into_par_iter()
        .map(|l| {
            let start = lane_start(l);
            let mut buf: Vec<Complex<S>> = (0..n).map(|j| values[start + j * stride] * pre[j]).collect();
            fft.process(&mut buf);
            for (b, p) in buf.iter_mut().zip(&post) {
                *b = *b * *p;
            }
            buf
        })
        .collect();
    for (l, buf) in processed.into_iter().enumerate() {
        let start = lane_start(l);
        for (j, v) in buf.into_iter().enumerate() {
            values[start + j * stride] = v;
        }
    }
}
