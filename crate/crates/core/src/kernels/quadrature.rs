//! Adaptive Gauss–Kronrod (7/15) quadrature on a list of breakpoints.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Values the integrator can sum: real scalars and complex numbers.
pub trait QuadValue<S: Scalar>: Copy + Zero + Add<Output = Self> + Sub<Output = Self> + Mul<S, Output = Self> + Send + Sync {
    fn magnitude(&self) -> S;
}

impl<S: Scalar> QuadValue<S> for S {
    fn magnitude(&self) -> S {
        self.abs()
    }
}

impl<S: Scalar> QuadValue<S> for Complex<S> {
    fn magnitude(&self) -> S {
        self.norm()
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Tolerances and limits for [`integrate`].
#[derive(Clone, Copy, Debug)]
pub struct QuadConfig<S> {
    pub abs_tol: S,
    pub rel_tol: S,
    pub max_intervals: usize,
}

impl<S: Scalar> Default for QuadConfig<S> {
    fn default() -> Self {
        Self { abs_tol: S::lit(1e-12), rel_tol: S::lit(1e-10), max_intervals: 200_000 }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct QuadResult<V, S> {
    pub value: V,
    pub error: S,
    pub intervals: usize,
}

struct Piece<V, S> {
    a: S,
    b: S,
    value: V,
    error: S,
}

impl<V, S: Scalar> PartialEq for Piece<V, S> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<V, S: Scalar> Eq for Piece<V, S> {}
impl<V, S: Scalar> PartialOrd for Piece<V, S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<V, S: Scalar> Ord for Piece<V, S> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

fn gk15<S: Scalar, V: QuadValue<S>, F: Fn(S) -> V>(f: &F, a: S, b: S) -> (V, S) {
    let half = S::lit(0.5);
    let center = (a + b) * half;
    let radius = (b - a) * half;
    let fc = f(center);
    let mut kronrod = fc * S::lit(WGK[7]);
    let mut gauss = fc * S::lit(WG[3]);
    for j in 0..7 {
        let dx = radius * S::lit(XGK[j]);
        let pair = f(center - dx) + f(center + dx);
        kronrod = kronrod + pair * S::lit(WGK[j]);
        if j % 2 == 1 {
            gauss = gauss + pair * S::lit(WG[j / 2]);
        }
    }
    let k = kronrod * radius;
    let g = gauss * radius;
    (k, (k - g).magnitude())
}

/// Integrates `f` over `[breaks[0], breaks[last]]`, starting from the given subdivision.
///
/// Intervals are bisected worst-first until the summed error estimate falls under
/// `max(abs_tol, rel_tol·|I|)`.
pub fn integrate<S, V, F>(f: F, breaks: &[S], cfg: &QuadConfig<S>) -> Result<QuadResult<V, S>>
where
    S: Scalar,
    V: QuadValue<S>,
    F: Fn(S) -> V,
{
    if breaks.len() < 2 {
        return Ok(QuadResult { value: V::zero(), error: S::zero(), intervals: 0 });
    }
    let mut heap = BinaryHeap::new();
    let mut total = V::zero();
    let mut err = S::zero();
    for w in breaks.windows(2) {
        if !(w[1] > w[0]) {
            continue;
        }
        let (value, error) = gk15(&f, w[0], w[1]);
        total = total + value;
        err = err + error;
        heap.push(Piece { a: w[0], b: w[1], value, error });
    }
    let floor = S::epsilon() * S::lit(50.0);
    loop {
        let target = cfg.abs_tol.max(cfg.rel_tol * total.magnitude());
        if err <= target {
            break;
        }
        if heap.len() >= cfg.max_intervals {
            return Err(Error::Quadrature { achieved: err.as_f64(), requested: target.as_f64() });
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => break,
        };
        let mid = (worst.a + worst.b) * S::lit(0.5);
        if !(mid > worst.a && mid < worst.b) || (worst.b - worst.a) <= floor * worst.a.abs().max(worst.b.abs()) {
            // interval cannot be split further in this precision
            let target = cfg.abs_tol.max(cfg.rel_tol * total.magnitude());
            return Err(Error::Quadrature { achieved: err.as_f64(), requested: target.as_f64() });
        }
        let (v1, e1) = gk15(&f, worst.a, mid);
        let (v2, e2) = gk15(&f, mid, worst.b);
        total = total - worst.value + v1 + v2;
        err = err - worst.error + e1 + e2;
        heap.push(Piece { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Piece { a: mid, b: worst.b, value: v2, error: e2 });
    }
    // re-sum to shed accumulated cancellation in the running totals
    let mut value = V::zero();
    let mut error = S::zero();
    let n = heap.len();
    for p in heap {
        value = value + p.value;
        error = error + p.error;
    }
    Ok(QuadResult { value, error, intervals: n })
}

/// Three-point Gauss–Legendre nodes and weights on `[a, b]`.
pub fn gauss_legendre3<S: Scalar>(a: S, b: S) -> [(S, S); 3] {
    let half = S::lit(0.5);
    let c = (a + b) * half;
    let r = (b - a) * half;
    let x = S::lit(0.6).sqrt();
    let w_edge = S::lit(5.0 / 9.0) * r;
    [(c - r * x, w_edge), (c, S::lit(8.0 / 9.0) * r), (c + r * x, w_edge)]
}
