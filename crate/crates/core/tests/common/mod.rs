#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sharp_resolvent::spectral::{kappa, RegionQuery, ShapeClass, SpectralParameter};
use sharp_resolvent::{Pair, Rational};

/// Expected shape, with closed-form parameters where the shape has them.
#[derive(Clone, Copy, Debug)]
pub enum Expect {
    Full,
    Empty,
    Disk(f64),
    Uniform(f64),
    Shrinking,
    Widening,
    Punctured,
    Cone(f64),
}

pub struct ShapeCase {
    pub name: &'static str,
    pub d: u32,
    pub s: (i64, i64),
    pub pair: (i64, i64, i64, i64),
    pub ell: f64,
    pub expect: Expect,
}

impl ShapeCase {
    pub fn query(&self) -> RegionQuery<f64> {
        let (a, b, c, e) = self.pair;
        RegionQuery::new(self.d, Rational::new(self.s.0, self.s.1), Pair::from_fractions(a, b, c, e).unwrap(), self.ell)
            .unwrap()
    }
}

/// Representative cases of every bullet of the shape taxonomy, for `s = 2` and fractional `s`.
pub fn shape_cases() -> Vec<ShapeCase> {
    use Expect::*;
    let cone = |ell: f64, gamma: f64| ell.powf(-1.0 / gamma).asin();
    vec![
        ShapeCase { name: "R1 d=3", d: 3, s: (2, 1), pair: (3, 4, 1, 4), ell: 2.0, expect: Disk(2f64.powf(-4.0)) },
        ShapeCase { name: "R1 d=2", d: 2, s: (2, 1), pair: (7, 8, 1, 8), ell: 1.0, expect: Disk(1.0) },
        ShapeCase { name: "H", d: 3, s: (2, 1), pair: (1, 2, 1, 2), ell: 1.0, expect: Uniform(1.0) },
        ShapeCase { name: "tilde-R2 minus H", d: 3, s: (2, 1), pair: (11, 20, 9, 20), ell: 1.0, expect: Shrinking },
        ShapeCase { name: "tilde-R3,0", d: 3, s: (2, 1), pair: (1, 2, 1, 6), ell: 2.0, expect: Uniform(0.25) },
        ShapeCase { name: "tilde-R3,+", d: 3, s: (2, 1), pair: (1, 2, 7, 30), ell: 1.0, expect: Shrinking },
        ShapeCase { name: "tilde-R3,-", d: 3, s: (2, 1), pair: (1, 2, 0, 1), ell: 1.5, expect: Widening },
        ShapeCase { name: "widening d=2", d: 2, s: (2, 1), pair: (2, 5, 0, 1), ell: 1.0, expect: Widening },
        ShapeCase { name: "(A,A') l=1", d: 3, s: (2, 1), pair: (5, 6, 1, 6), ell: 1.0, expect: Full },
        ShapeCase { name: "(A,A') l<1", d: 3, s: (2, 1), pair: (5, 6, 1, 6), ell: 0.5, expect: Empty },
        ShapeCase { name: "((2/d,0),A) l<1", d: 4, s: (2, 1), pair: (9, 16, 1, 16), ell: 0.5, expect: Empty },
        ShapeCase { name: "((2/d,0),A) l=1", d: 4, s: (2, 1), pair: (9, 16, 1, 16), ell: 1.0, expect: Punctured },
        ShapeCase { name: "((2/d,0),A) l>1", d: 4, s: (2, 1), pair: (9, 16, 1, 16), ell: 2.0, expect: Cone(cone(2.0, 0.25)) },
        ShapeCase { name: "cone limit d=4", d: 4, s: (2, 1), pair: (1, 2, 0, 1), ell: 2.0, expect: Cone(cone(2.0, 0.5)) },
        ShapeCase { name: "s<2d/(d+1), omega>0", d: 3, s: (1, 1), pair: (1, 2, 1, 3), ell: 1.0, expect: Widening },
        ShapeCase { name: "s<2d/(d+1), omega=0, l=1", d: 3, s: (1, 1), pair: (1, 2, 1, 6), ell: 1.0, expect: Punctured },
        ShapeCase { name: "s=2d/(d+1), tilde-R2", d: 3, s: (3, 2), pair: (11, 20, 9, 20), ell: 2.0, expect: Uniform(2f64.powf(-1.25)) },
        ShapeCase { name: "s=2d/(d+1), R1 omega=0", d: 3, s: (3, 2), pair: (3, 4, 1, 4), ell: 1.0, expect: Full },
        ShapeCase { name: "s>2d/(d+1), R1", d: 3, s: (5, 2), pair: (3, 4, 1, 4), ell: 2.0, expect: Disk(2f64.powf(-2.5)) },
        ShapeCase { name: "s>2d/(d+1), H", d: 3, s: (5, 2), pair: (1, 2, 1, 2), ell: 3.0, expect: Uniform(1.0 / 3.0) },
    ]
}

pub fn matches(expect: Expect, got: ShapeClass<f64>, tol: f64) -> bool {
    use ShapeClass as S;
    match (expect, got) {
        (Expect::Full, S::FullComplement) | (Expect::Empty, S::Empty) => true,
        (Expect::Shrinking, S::ShrinkingNeighborhood) | (Expect::Widening, S::WideningNeighborhood) => true,
        (Expect::Punctured, S::PuncturedHalfPlane) => true,
        (Expect::Disk(r), S::DiskComplement { radius }) => (r - radius).abs() <= tol * r,
        (Expect::Uniform(w), S::UniformNeighborhood { width }) => (w - width).abs() <= tol * w,
        (Expect::Cone(a), S::ConeComplement { half_angle }) => (a - half_angle).abs() <= tol,
        _ => false,
    }
}

/// Membership read off the closed-form description of each shape.
pub fn closed_form_member(query: &RegionQuery<f64>, shape: ShapeClass<f64>, z: &SpectralParameter<f64>) -> bool {
    use ShapeClass as S;
    let (re, im, r) = (z.re(), z.im(), z.abs());
    match shape {
        S::FullComplement => true,
        S::Empty => false,
        S::DiskComplement { radius } => r >= radius,
        S::UniformNeighborhood { width } => {
            if re <= 0.0 {
                r >= width
            } else {
                im.abs() >= width
            }
        }
        S::PuncturedHalfPlane => re <= 0.0,
        S::ConeComplement { half_angle } => re <= 0.0 || im.abs() >= half_angle.sin() * r,
        S::ShrinkingNeighborhood | S::WideningNeighborhood => {
            let g = query.gamma_f();
            let w = query.omega_f();
            if re <= 0.0 {
                r >= query.ell.powf(-1.0 / w)
            } else {
                im.abs() >= query.ell.powf(-1.0 / g) * r.powf(1.0 - w / g)
            }
        }
    }
}

/// Log-uniform modulus, uniform argument away from the ray.
pub fn random_z(rng: &mut StdRng) -> SpectralParameter<f64> {
    loop {
        let r = 10f64.powf(rng.random_range(-3.0..3.0));
        let t = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        if let Ok(z) = SpectralParameter::new(r * t.cos(), r * t.sin()) {
            return z;
        }
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Points so close to `κ = ℓ` that rounding may decide membership either way.
pub fn near_boundary(query: &RegionQuery<f64>, z: &SpectralParameter<f64>) -> bool {
    (kappa(query, z) / query.ell - 1.0).abs() < 1e-10
}

pub fn random_field(
    rng: &mut StdRng,
    grid: &std::sync::Arc<sharp_resolvent::grid::GridSpec<f64>>,
) -> sharp_resolvent::grid::GridField<f64> {
    let v = (0..grid.len())
        .map(|_| num_complex::Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    sharp_resolvent::grid::GridField::new(grid.clone(), sharp_resolvent::grid::Domain::Space, v).unwrap()
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
