use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::region::{classify, RegionLabel};
use super::{int, rat, ExactInt, ExponentPair};
use crate::error::{Error, Result};

/// The four affine pieces whose maximum defines `γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GammaBranch {
    Zero,
    Trapezoid,
    QuadLeft,
    QuadRight,
}

impl GammaBranch {
    pub const ALL: [GammaBranch; 4] = [Self::Zero, Self::Trapezoid, Self::QuadLeft, Self::QuadRight];

    pub fn dual(self) -> Self {
        match self {
            Self::QuadLeft => Self::QuadRight,
            Self::QuadRight => Self::QuadLeft,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Zero => "Zero",
            Self::Trapezoid => "Trapezoid",
            Self::QuadLeft => "QuadLeft",
            Self::QuadRight => "QuadRight",
        }
    }

    /// Value of this piece at `pair`.
    pub fn evaluate<I: ExactInt>(self, d: u32, pair: &ExponentPair<I>) -> Ratio<I> {
        let n = d as i64;
        let (x, y) = pair.as_point();
        match self {
            Self::Zero => Ratio::zero(),
            Self::Trapezoid => Ratio::one() - rat::<I>(n + 1, 2) * (x - y),
            Self::QuadLeft => rat::<I>(n + 1, 2) - int::<I>(n) * x,
            Self::QuadRight => int::<I>(n) * y - rat::<I>(n - 1, 2),
        }
    }
}

fn check_dim(d: u32) -> Result<()> {
    if d < 2 {
        return Err(Error::Domain(format!("gamma needs d >= 2 (got {d})")));
    }
    Ok(())
}

/// `γ = max{0, 1 − (d+1)/2·(x−y), (d+1)/2 − d·x, d·y − (d−1)/2}`.
pub fn gamma<I: ExactInt>(d: u32, pair: &ExponentPair<I>) -> Result<Ratio<I>> {
    check_dim(d)?;
    Ok(GammaBranch::ALL
        .iter()
        .map(|b| b.evaluate(d, pair))
        .max()
        .expect("four branches"))
}

/// Which piece of `γ` is active, plus the raw argmax diagnostics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchReport {
    /// Branch dictated by the region label where one applies, raw argmax otherwise.
    pub branch: GammaBranch,
    pub raw_argmax: GammaBranch,
    /// More than one piece attains the maximum.
    pub raw_tie: bool,
    pub tied: Vec<GammaBranch>,
}

pub fn gamma_branch<I: ExactInt>(d: u32, pair: &ExponentPair<I>) -> Result<BranchReport> {
    let value = gamma(d, pair)?;
    let tied: Vec<GammaBranch> = GammaBranch::ALL
        .iter()
        .copied()
        .filter(|b| b.evaluate(d, pair) == value)
        .collect();
    let raw_argmax = tied[0];
    let by_region = match classify(d, pair)?.coarse {
        RegionLabel::R1 => Some(GammaBranch::Zero),
        RegionLabel::R2 => Some(GammaBranch::Trapezoid),
        RegionLabel::R3 => Some(GammaBranch::QuadLeft),
        RegionLabel::R3Dual => Some(GammaBranch::QuadRight),
        _ => None,
    };
    Ok(BranchReport {
        branch: by_region.unwrap_or(raw_argmax),
        raw_argmax,
        raw_tie: tied.len() > 1,
        tied,
    })
}

/// `ω = 1 − (d/s)(x − y)` with a flag telling whether the pair lies in `R^s_0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "I: Serialize"))]
pub struct Omega<I: ExactInt = i64> {
    pub value: Ratio<I>,
    pub in_range: bool,
}

pub fn omega<I: ExactInt>(d: u32, s: &Ratio<I>, pair: &ExponentPair<I>) -> Result<Omega<I>> {
    if !s.is_positive() {
        return Err(Error::Domain(format!("order s must be positive (got {s})")));
    }
    if d < 1 {
        return Err(Error::Domain("dimension must be positive".into()));
    }
    let ratio = int::<I>(d as i64) / s.clone();
    let value = Ratio::one() - ratio * pair.gap();
    Ok(Omega { value, in_range: super::region::in_r0(d, s, pair) })
}
