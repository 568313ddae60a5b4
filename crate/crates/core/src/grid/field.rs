use std::sync::Arc;

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::scalar::Scalar;

/// Default cap on the number of grid points.
pub const DEFAULT_BUDGET: usize = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Axis<S> {
    pub n: usize,
    pub length: S,
    pub carrier: S,
}

impl<S: Scalar> Axis<S> {
    pub fn new(n: usize, length: S) -> Self {
        Self { n, length, carrier: S::zero() }
    }

    pub fn with_carrier(n: usize, length: S, carrier: S) -> Self {
        Self { n, length, carrier }
    }

    pub fn spacing(&self) -> S {
        self.length / S::from_usize_lossy(self.n)
    }

    /// Frequency step `2π/L`.
    pub fn frequency_step(&self) -> S {
        S::TAU() / self.length
    }

    pub fn point(&self, j: usize) -> S {
        -self.length * S::lit(0.5) + S::from_usize_lossy(j) * self.spacing()
    }

    /// Frequency at storage index `m`, i.e. `k = m − n/2`.
    pub fn frequency(&self, m: usize) -> S {
        let k = S::from_usize_lossy(m) - S::from_usize_lossy(self.n / 2);
        self.carrier + k * self.frequency_step()
    }

    /// Lowest and highest sampled frequency.
    pub fn frequency_range(&self) -> (S, S) {
        (self.frequency(0), self.frequency(self.n - 1))
    }
}

/// Shape of a `d`-dimensional periodic grid, `d ∈ {1, 2, 3}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec<S> {
    axes: Vec<Axis<S>>,
}

impl<S: Scalar> GridSpec<S> {
    pub fn new(axes: Vec<Axis<S>>) -> Result<Self> {
        Self::with_budget(axes, DEFAULT_BUDGET)
    }

    pub fn with_budget(axes: Vec<Axis<S>>, budget: usize) -> Result<Self> {
        if axes.is_empty() || axes.len() > 3 {
            return error::domain(format!("grid dimension must be 1, 2 or 3 (got {})", axes.len()));
        }
        let mut points: usize = 1;
        for (i, a) in axes.iter().enumerate() {
            if a.n < 8 || !a.n.is_power_of_two() {
                return error::domain(format!("axis {i}: n = {} must be a power of two >= 8", a.n));
            }
            if !(a.length > S::zero()) || !a.length.is_finite() || !a.carrier.is_finite() {
                return error::domain(format!("axis {i}: length must be positive and finite"));
            }
            points = points.saturating_mul(a.n);
        }
        if points > budget {
            return Err(Error::Budget { points, budget });
        }
        Ok(Self { axes })
    }

    /// `[−L/2, L/2)^d` with `n` points per axis and no carrier.
    pub fn cubic(d: usize, n: usize, length: S) -> Result<Self> {
        Self::new(vec![Axis::new(n, length); d])
    }

    pub fn d(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Axis<S>] {
        &self.axes
    }

    pub fn axis(&self, i: usize) -> &Axis<S> {
        &self.axes[i]
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.n).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cell volume `∏ h_i` of the space grid.
    pub fn cell_volume(&self) -> S {
        self.axes.iter().fold(S::one(), |acc, a| acc * a.spacing())
    }

    /// Cell volume `∏ 2π/L_i` of the frequency lattice.
    pub fn frequency_cell(&self) -> S {
        self.axes.iter().fold(S::one(), |acc, a| acc * a.frequency_step())
    }

    /// Multi-index of a flat row-major index (last axis fastest).
    pub fn unravel(&self, mut flat: usize) -> [usize; 3] {
        let mut idx = [0usize; 3];
        for i in (0..self.d()).rev() {
            idx[i] = flat % self.axes[i].n;
            flat /= self.axes[i].n;
        }
        idx
    }

    pub fn ravel(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.axes).fold(0, |acc, (&i, a)| acc * a.n + i)
    }

    pub fn point(&self, flat: usize) -> [S; 3] {
        let idx = self.unravel(flat);
        let mut x = [S::zero(); 3];
        for i in 0..self.d() {
            x[i] = self.axes[i].point(idx[i]);
        }
        x
    }

    pub fn frequency(&self, flat: usize) -> [S; 3] {
        let idx = self.unravel(flat);
        let mut xi = [S::zero(); 3];
        for i in 0..self.d() {
            xi[i] = self.axes[i].frequency(idx[i]);
        }
        xi
    }

    pub fn frequency_norm(&self, flat: usize) -> S {
        self.frequency(flat).iter().fold(S::zero(), |acc, v| acc + *v * *v).sqrt()
    }
}

/// Which side of the transform a field lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Domain {
    Space,
    Frequency,
}

/// Complex samples on a grid, row-major with the last axis fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct GridField<S: Scalar> {
    grid: Arc<GridSpec<S>>,
    domain: Domain,
    values: Vec<Complex<S>>,
}

impl<S: Scalar> GridField<S> {
    pub fn new(grid: Arc<GridSpec<S>>, domain: Domain, values: Vec<Complex<S>>) -> Result<Self> {
        if values.len() != grid.len() {
            return error::domain(format!("field has {} values, grid has {} points", values.len(), grid.len()));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return error::domain("field contains non-finite values");
        }
        Ok(Self { grid, domain, values })
    }

    pub fn zeros(grid: Arc<GridSpec<S>>, domain: Domain) -> Self {
        let n = grid.len();
        Self { grid, domain, values: vec![Complex::zero(); n] }
    }

    /// Samples `f` at the grid points (space) or frequencies.
    pub fn from_fn<F>(grid: Arc<GridSpec<S>>, domain: Domain, f: F) -> Result<Self>
    where
        F: Fn([S; 3]) -> Complex<S> + Sync,
    {
        use rayon::prelude::*;
        let values: Vec<Complex<S>> = (0..grid.len())
            .into_par_iter()
            .map(|i| match domain {
                Domain::Space => f(grid.point(i)),
                Domain::Frequency => f(grid.frequency(i)),
            })
            .collect();
        Self::new(grid, domain, values)
    }

    pub(crate) fn from_parts_unchecked(grid: Arc<GridSpec<S>>, domain: Domain, values: Vec<Complex<S>>) -> Self {
        Self { grid, domain, values }
    }

    pub fn grid(&self) -> &GridSpec<S> {
        &self.grid
    }

    pub fn grid_arc(&self) -> &Arc<GridSpec<S>> {
        &self.grid
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn values(&self) -> &[Complex<S>] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex<S>> {
        self.values
    }

    /// Measure of one cell: `∏ h_i` in space, `∏ 2π/L_i` in frequency.
    pub fn cell_measure(&self) -> S {
        match self.domain {
            Domain::Space => self.grid.cell_volume(),
            Domain::Frequency => self.grid.frequency_cell(),
        }
    }

    pub fn map<F: Fn(Complex<S>) -> Complex<S>>(&self, f: F) -> Result<Self> {
        Self::new(self.grid.clone(), self.domain, self.values.iter().map(|&v| f(v)).collect())
    }

    /// Pointwise `a·self + b·other` on the same grid.
    pub fn combine(&self, a: Complex<S>, other: &Self, b: Complex<S>) -> Result<Self> {
        if self.grid != other.grid || self.domain != other.domain {
            return error::domain("fields live on different grids");
        }
        let v = self.values.iter().zip(&other.values).map(|(x, y)| *x * a + *y * b).collect();
        Self::new(self.grid.clone(), self.domain, v)
    }

    /// Cyclic shift by a lattice vector (in grid steps per axis).
    ///
    /// Along an axis with carrier `c` the inverse transform is only periodic up to
    /// the factor `e^{iLc}`, so there a cyclic shift is not a translation.
    pub fn shift(&self, steps: &[isize]) -> Self {
        let g = &self.grid;
        let mut out = vec![Complex::zero(); self.values.len()];
        for (flat, v) in self.values.iter().enumerate() {
            let mut idx = g.unravel(flat);
            for i in 0..g.d() {
                let n = g.axis(i).n as isize;
                idx[i] = ((idx[i] as isize + steps.get(i).copied().unwrap_or(0)).rem_euclid(n)) as usize;
            }
            out[g.ravel(&idx[..g.d()])] = *v;
        }
        Self { grid: g.clone(), domain: self.domain, values: out }
    }
}
