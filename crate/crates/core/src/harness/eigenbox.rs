use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::extremizers::phi;
use crate::grid::{lp_norm, Domain, GridField, GridSpec};
use crate::spectral::{eigenvalue_enclosure, kappa, membership, RegionQuery, SpectralParameter};
use crate::Pair;

const CAVEAT: &str = "Exclusions assume the supplied C is a valid constant in the uniform resolvent bound; \
that constant is not known explicitly, so the exclusion test is only as reliable as C. Eigenvalues come from a \
periodic finite-difference operator, which approximates but does not equal the operator on the line.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PotentialPreset {
    /// `A e^{−x²}`.
    Gaussian,
    /// `A` on `|x| ≤ 1`.
    Box,
    /// `iA φ(x/2)` with `φ` the plateau bump.
    ComplexBump,
}

impl PotentialPreset {
    pub fn sample(self, x: f64, amplitude: f64) -> Complex<f64> {
        match self {
            Self::Gaussian => Complex::new(amplitude * (-x * x).exp(), 0.0),
            Self::Box => Complex::new(if x.abs() <= 1.0 { amplitude } else { 0.0 }, 0.0),
            Self::ComplexBump => Complex::new(0.0, amplitude * phi(x / 2.0)),
        }
    }
}

impl fmt::Display for PotentialPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Gaussian => "gaussian",
            Self::Box => "box",
            Self::ComplexBump => "complex-bump",
        })
    }
}

impl FromStr for PotentialPreset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gaussian" => Ok(Self::Gaussian),
            "box" => Ok(Self::Box),
            "complex-bump" => Ok(Self::ComplexBump),
            other => Err(Error::Parse(format!("unknown potential preset '{other}'"))),
        }
    }
}

/// `−u'' + V u` on a periodic grid of `[−L/2, L/2)` by second differences.
#[derive(Clone, Debug)]
pub struct DiscreteSchrodinger {
    grid: Arc<GridSpec<f64>>,
    potential: Vec<Complex<f64>>,
}

impl DiscreteSchrodinger {
    pub const MAX_N: usize = 512;

    pub fn new(n: usize, length: f64, potential: impl Fn(f64) -> Complex<f64>) -> Result<Self> {
        if n > Self::MAX_N {
            return domain(format!("dense eigen demo is limited to n <= {}", Self::MAX_N));
        }
        let grid = Arc::new(GridSpec::cubic(1, n, length)?);
        let potential: Vec<Complex<f64>> = (0..n).map(|j| potential(grid.axis(0).point(j))).collect();
        if potential.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return domain("potential must be finite");
        }
        Ok(Self { grid, potential })
    }

    pub fn spacing(&self) -> f64 {
        self.grid.axis(0).spacing()
    }

    pub fn is_hermitian(&self) -> bool {
        self.potential.iter().all(|v| v.im == 0.0)
    }

    /// `‖V‖_r` as a Riemann sum.
    pub fn potential_norm(&self, r: f64) -> Result<f64> {
        lp_norm(&GridField::new(self.grid.clone(), Domain::Space, self.potential.clone())?, r)
    }

    fn real_matrix(&self) -> DMatrix<f64> {
        let n = self.potential.len();
        let k = 1.0 / (self.spacing() * self.spacing());
        DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                2.0 * k + self.potential[i].re
            } else if (i + 1) % n == j || (j + 1) % n == i {
                -k
            } else {
                0.0
            }
        })
    }

    /// All eigenvalues; a symmetric solver is used when `V` is real.
    pub fn spectrum(&self) -> Result<Vec<Complex<f64>>> {
        let real = self.real_matrix();
        let mut out: Vec<Complex<f64>> = if self.is_hermitian() {
            real.symmetric_eigenvalues().iter().map(|&e| Complex::new(e, 0.0)).collect()
        } else {
            let mut m = real.map(|v| Complex::new(v, 0.0));
            for (i, v) in self.potential.iter().enumerate() {
                m[(i, i)].im = v.im;
            }
            m.eigenvalues().ok_or_else(|| Error::Eigen("Schur iteration did not converge".into()))?.iter().copied().collect()
        };
        out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenboxConfig {
    pub n: usize,
    pub length: f64,
    pub pair: Pair,
    pub ell: f64,
    pub c: f64,
    pub t: f64,
    pub preset: PotentialPreset,
    pub amplitude: f64,
}

impl EigenboxConfig {
    pub fn new(pair: Pair, ell: f64, c: f64, t: f64, preset: PotentialPreset, amplitude: f64) -> Self {
        Self { n: 256, length: 20.0, pair, ell, c, t, preset, amplitude }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenRecord {
    pub re: f64,
    pub im: f64,
    /// `dist(λ, [0, ∞))`.
    pub dist: f64,
    pub kappa: f64,
    pub in_region: bool,
    /// In `Z(ℓ)` while the small-potential hypothesis holds.
    pub violation: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenboxReport {
    pub schema: String,
    pub config: EigenboxConfig,
    pub spacing: f64,
    pub potential_exponent: String,
    pub potential_norm: f64,
    pub threshold: f64,
    pub admissible: bool,
    pub hermitian: bool,
    pub spectrum_size: usize,
    pub min_re: f64,
    pub max_abs_im: f64,
    pub off_ray: Vec<EigenRecord>,
    pub violations: usize,
    pub caveat: String,
}

pub fn run_eigenbox(cfg: &EigenboxConfig) -> Result<EigenboxReport> {
    let gap = cfg.pair.gap();
    if *gap.numer() <= 0 {
        return domain("the potential exponent pq/(q - p) needs p < q");
    }
    let exponent = gap.recip();
    let r = *exponent.numer() as f64 / *exponent.denom() as f64;
    let op = DiscreteSchrodinger::new(cfg.n, cfg.length, |x| cfg.preset.sample(x, cfg.amplitude))?;
    let norm = op.potential_norm(r)?;
    let query = RegionQuery::<f64>::line(cfg.pair.clone(), cfg.ell)?;
    let enclosure = eigenvalue_enclosure(&query, norm, cfg.c, cfg.t)?;
    let spectrum = op.spectrum()?;
    let scale = 4.0 / (op.spacing() * op.spacing());
    let tol = 1e-9 * scale;
    let mut off_ray = Vec::new();
    for lam in &spectrum {
        if lam.im.abs() <= tol && lam.re >= -tol {
            continue;
        }
        let z = SpectralParameter::from_complex(*lam)?;
        let in_region = membership(&query, &z);
        off_ray.push(EigenRecord {
            re: lam.re,
            im: lam.im,
            dist: z.dist(),
            kappa: kappa(&query, &z),
            in_region,
            violation: enclosure.excludes(&z),
        });
    }
    let violations = off_ray.iter().filter(|e| e.violation).count();
    Ok(EigenboxReport {
        schema: "eigenbox/1".into(),
        config: cfg.clone(),
        spacing: op.spacing(),
        potential_exponent: exponent.to_string(),
        potential_norm: norm,
        threshold: enclosure.threshold,
        admissible: enclosure.admissible,
        hermitian: op.is_hermitian(),
        spectrum_size: spectrum.len(),
        min_re: spectrum.iter().map(|l| l.re).fold(f64::INFINITY, f64::min),
        max_abs_im: spectrum.iter().map(|l| l.im.abs()).fold(0.0, f64::max),
        off_ray,
        violations,
        caveat: CAVEAT.into(),
    })
}
