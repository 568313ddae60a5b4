use serde::Serialize;

use super::{rat, ExactInt, ExponentPair};
use crate::error::{Error, Result};

/// Named points of the exponent square for a fixed dimension.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "I: Serialize"))]
pub struct CriticalPoints<I: ExactInt = i64> {
    pub d: u32,
    a: Option<ExponentPair<I>>,
    a_dual: Option<ExponentPair<I>>,
    pub b: ExponentPair<I>,
    pub b_dual: ExponentPair<I>,
    pub d_point: ExponentPair<I>,
    pub d_dual: ExponentPair<I>,
    pub e: ExponentPair<I>,
    pub e_dual: ExponentPair<I>,
    pub h: ExponentPair<I>,
    pub p_star: ExponentPair<I>,
    pub p_circ: ExponentPair<I>,
    pub p_circ_dual: ExponentPair<I>,
}

impl<I: ExactInt> CriticalPoints<I> {
    /// `A = ((d+1)/2d, (d-3)/2d)`; only defined for `d ≥ 3`.
    pub fn a(&self) -> Result<&ExponentPair<I>> {
        self.a
            .as_ref()
            .ok_or_else(|| Error::NotDefined(format!("A is defined only for d >= 3 (got d = {})", self.d)))
    }

    pub fn a_dual(&self) -> Result<&ExponentPair<I>> {
        self.a_dual
            .as_ref()
            .ok_or_else(|| Error::NotDefined(format!("A' is defined only for d >= 3 (got d = {})", self.d)))
    }

    /// `1/p_*`, the common coordinate of `P_*`.
    pub fn inv_p_star(&self) -> &num_rational::Ratio<I> {
        self.p_star.x()
    }

    /// Every defined point with its conventional name.
    pub fn named(&self) -> Vec<(&'static str, &ExponentPair<I>)> {
        let mut out = Vec::with_capacity(13);
        if let (Some(a), Some(ad)) = (&self.a, &self.a_dual) {
            out.push(("A", a));
            out.push(("A'", ad));
        }
        out.extend([
            ("B", &self.b),
            ("B'", &self.b_dual),
            ("D", &self.d_point),
            ("D'", &self.d_dual),
            ("E", &self.e),
            ("E'", &self.e_dual),
            ("H", &self.h),
            ("P*", &self.p_star),
            ("P0", &self.p_circ),
            ("P0'", &self.p_circ_dual),
        ]);
        out
    }
}

pub fn critical_points<I: ExactInt>(d: u32) -> Result<CriticalPoints<I>> {
    if d < 2 {
        return Err(Error::Domain(format!("critical points need d >= 2 (got {d})")));
    }
    let n = d as i64;
    let pair = |xn: i64, xd: i64, yn: i64, yd: i64| ExponentPair::new(rat(xn, xd), rat(yn, yd));

    let (a, a_dual) = if d >= 3 {
        (Some(pair(n + 1, 2 * n, n - 3, 2 * n)?), Some(pair(n + 3, 2 * n, n - 1, 2 * n)?))
    } else {
        (None, None)
    };
    let b = pair(n + 1, 2 * n, (n - 1) * (n - 1), 2 * n * (n + 1))?;
    let b_dual = pair(n * n + 4 * n - 1, 2 * n * (n + 1), n - 1, 2 * n)?;
    let d_point = pair(n - 1, 2 * n, n - 1, 2 * n)?;
    let d_dual = pair(n + 1, 2 * n, n + 1, 2 * n)?;
    let e = pair(n + 1, 2 * n, 0, 1)?;
    let e_dual = pair(1, 1, n - 1, 2 * n)?;
    let h = pair(1, 2, 1, 2)?;

    let (p_star, p_circ) = if d % 2 == 1 {
        let ps = (3 * (n - 1), 2 * (3 * n + 1));
        let den = 2 * (n * n + 4 * n - 1);
        (pair(ps.0, ps.1, ps.0, ps.1)?, pair((n + 5) * (n - 1), den, (n - 1) * (n + 3), den)?)
    } else {
        let ps = (3 * n - 2, 2 * (3 * n + 2));
        let den = 2 * (n * n + 3 * n - 2);
        (pair(ps.0, ps.1, ps.0, ps.1)?, pair(n * n + 3 * n - 6, den, (n - 1) * (n + 2), den)?)
    };
    let p_circ_dual = p_circ.dual();

    Ok(CriticalPoints { d, a, a_dual, b, b_dual, d_point, d_dual, e, e_dual, h, p_star, p_circ, p_circ_dual })
}
