use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::geometry::{hull_contains, on_segment, on_segment_half_open};
use super::points::{critical_points, CriticalPoints};
use super::{int, rat, ExactInt, ExponentPair};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RegionLabel {
    R1,
    R2,
    R3,
    R3Dual,
    TildeR2,
    TildeR3,
    TildeR3Dual,
    SegmentBE,
    SegmentBprimeEprime,
    SegmentDH,
    SegmentDprimeH,
    OutsideR0,
    ExcludedCorner,
}

impl RegionLabel {
    pub fn dual(self) -> Self {
        use RegionLabel::*;
        match self {
            R3 => R3Dual,
            R3Dual => R3,
            TildeR3 => TildeR3Dual,
            TildeR3Dual => TildeR3,
            SegmentBE => SegmentBprimeEprime,
            SegmentBprimeEprime => SegmentBE,
            SegmentDH => SegmentDprimeH,
            SegmentDprimeH => SegmentDH,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        use RegionLabel::*;
        match self {
            R1 => "R1",
            R2 => "R2",
            R3 => "R3",
            R3Dual => "R3dual",
            TildeR2 => "TildeR2",
            TildeR3 => "TildeR3",
            TildeR3Dual => "TildeR3dual",
            SegmentBE => "SegmentBE",
            SegmentBprimeEprime => "SegmentBprimeEprime",
            SegmentDH => "SegmentDH",
            SegmentDprimeH => "SegmentDprimeH",
            OutsideR0 => "OutsideR0",
            ExcludedCorner => "ExcludedCorner",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Fine label together with the coarse `R_i` it refines.
///
/// For pairs off the four regions both labels coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Classification {
    pub fine: RegionLabel,
    pub coarse: RegionLabel,
}

impl Classification {
    fn same(label: RegionLabel) -> Self {
        Self { fine: label, coarse: label }
    }

    pub fn dual(self) -> Self {
        Self { fine: self.fine.dual(), coarse: self.coarse.dual() }
    }

    /// Inside `R_0`, i.e. the resolvent is bounded at all.
    pub fn in_r0(self) -> bool {
        !matches!(self.coarse, RegionLabel::OutsideR0 | RegionLabel::ExcludedCorner)
    }

    /// One of `R_1, R_2, R_3, R_3'`, where a sharp two-sided estimate is stated.
    pub fn estimate_bearing(self) -> bool {
        use RegionLabel::*;
        matches!(self.coarse, R1 | R2 | R3 | R3Dual)
    }

    /// In `R_1` or a tilde refinement, where the sharp bound is established rather than conjectured.
    pub fn proven(self) -> bool {
        use RegionLabel::*;
        matches!(self.fine, R1 | TildeR2 | TildeR3 | TildeR3Dual)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.fine == self.coarse {
            write!(f, "{}", self.fine)
        } else {
            write!(f, "{} ({})", self.fine, self.coarse)
        }
    }
}

/// Dimension and order of the operator `(−Δ)^{s/2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "I: Serialize"))]
pub struct DimensionOrder<I: ExactInt = i64> {
    pub d: u32,
    pub s: Ratio<I>,
}

impl<I: ExactInt> DimensionOrder<I> {
    /// Accepts `0 < s < d`, and `s = 2` in any dimension `d ≥ 2`.
    pub fn new(d: u32, s: Ratio<I>) -> Result<Self> {
        if d < 2 {
            return Err(Error::Domain(format!("region classification needs d >= 2 (got {d})")));
        }
        let laplacian = s == int(2);
        if !laplacian && (!s.is_positive() || s >= int(d as i64)) {
            return Err(Error::Domain(format!("order s = {s} must lie in (0, {d})")));
        }
        Ok(Self { d, s })
    }

    pub fn laplacian(d: u32) -> Result<Self> {
        Self::new(d, int(2))
    }
}

pub(crate) fn in_r0<I: ExactInt>(d: u32, s: &Ratio<I>, pair: &ExponentPair<I>) -> bool {
    let gap = pair.gap();
    let sd = s.clone() / int::<I>(d as i64);
    !gap.is_negative() && gap <= sd && !is_corner(d, s, pair)
}

fn is_corner<I: ExactInt>(d: u32, s: &Ratio<I>, pair: &ExponentPair<I>) -> bool {
    let n = int::<I>(d as i64);
    let sd = s.clone() / n;
    let (x, y) = pair.as_point();
    (x.is_one() && y == Ratio::one() - sd.clone()) || (x == sd && y.is_zero())
}

fn in_p<I: ExactInt>(d: i64, x: &Ratio<I>, y: &Ratio<I>) -> bool {
    x.clone() - y.clone() >= rat(2, d + 1) && *x > rat(d + 1, 2 * d) && *y < rat(d - 1, 2 * d)
}

fn in_t<I: ExactInt>(d: i64, x: &Ratio<I>, y: &Ratio<I>) -> bool {
    let gap = x.clone() - y.clone();
    let rest = Ratio::one() - x.clone();
    !gap.is_negative()
        && gap < rat(2, d + 1)
        && rat::<I>(d - 1, d + 1) * rest.clone() <= *y
        && *y <= rat::<I>(d + 1, d - 1) * rest
}

fn in_q<I: ExactInt>(d: i64, x: &Ratio<I>, y: &Ratio<I>) -> bool {
    *y < rat::<I>(d - 1, d + 1) * (Ratio::one() - x.clone()) && y <= x && *x < rat(d + 1, 2 * d)
}

fn in_tilde_r2<I: ExactInt>(cp: &CriticalPoints<I>, pt: &(Ratio<I>, Ratio<I>)) -> bool {
    let h = cp.h.as_point();
    let pc = cp.p_circ.as_point();
    let pcd = cp.p_circ_dual.as_point();
    let b = cp.b.as_point();
    let bd = cp.b_dual.as_point();
    hull_contains(&[b.clone(), bd.clone(), pcd.clone(), h.clone(), pc.clone()], pt)
        && !on_segment_half_open(pt, &pc, &h)
        && !on_segment_half_open(pt, &pcd, &h)
        && !on_segment(pt, &b, &bd)
}

fn in_bad_triangle<I: ExactInt>(cp: &CriticalPoints<I>, pt: &(Ratio<I>, Ratio<I>)) -> bool {
    hull_contains(&[cp.d_point.as_point(), cp.p_circ.as_point(), cp.p_star.as_point()], pt)
}

fn classify_in<I: ExactInt>(d: u32, s: &Ratio<I>, pair: &ExponentPair<I>) -> Result<Classification> {
    use RegionLabel::*;
    let cp = critical_points::<I>(d)?;
    if is_corner(d, s, pair) {
        return Ok(Classification::same(ExcludedCorner));
    }
    if !in_r0(d, s, pair) {
        return Ok(Classification::same(OutsideR0));
    }
    let n = d as i64;
    let pt = pair.as_point();
    let (x, y) = (&pt.0, &pt.1);

    if in_p(n, x, y) {
        return Ok(Classification::same(R1));
    }
    if on_segment(&pt, &cp.b.as_point(), &cp.e.as_point()) {
        return Ok(Classification::same(SegmentBE));
    }
    if on_segment(&pt, &cp.b_dual.as_point(), &cp.e_dual.as_point()) {
        return Ok(Classification::same(SegmentBprimeEprime));
    }
    let h = cp.h.as_point();
    if on_segment_half_open(&pt, &cp.d_point.as_point(), &h) {
        return Ok(Classification::same(SegmentDH));
    }
    if on_segment_half_open(&pt, &cp.d_dual.as_point(), &h) {
        return Ok(Classification::same(SegmentDprimeH));
    }
    if in_t(n, x, y) {
        let fine = if in_tilde_r2(&cp, &pt) { TildeR2 } else { R2 };
        return Ok(Classification { fine, coarse: R2 });
    }
    if in_q(n, x, y) {
        let fine = if in_bad_triangle(&cp, &pt) { R3 } else { TildeR3 };
        return Ok(Classification { fine, coarse: R3 });
    }
    let dual = pair.dual().as_point();
    if in_q(n, &dual.0, &dual.1) {
        let fine = if in_bad_triangle(&cp, &dual) { R3Dual } else { TildeR3Dual };
        return Ok(Classification { fine, coarse: R3Dual });
    }
    unreachable!("P, T, Q, Q' and the segments cover the lower triangle; {pair} was missed")
}

/// Region of `pair` for the Laplacian (`s = 2`).
pub fn classify<I: ExactInt>(d: u32, pair: &ExponentPair<I>) -> Result<Classification> {
    let order = DimensionOrder::laplacian(d)?;
    classify_in(order.d, &order.s, pair)
}

/// Region of `pair` for `(−Δ)^{s/2}`, `0 < s < d` (or `s = 2`).
pub fn classify_fractional<I: ExactInt>(d: u32, s: &Ratio<I>, pair: &ExponentPair<I>) -> Result<Classification> {
    let order = DimensionOrder::new(d, s.clone())?;
    classify_in(order.d, &order.s, pair)
}
