//! Exact-rational geography of the exponent square `I² = {(x, y) : 0 ≤ x, y ≤ 1}`
//! with `x = 1/p`, `y = 1/q`.
//!
//! Everything here is decided with exact arithmetic: the regions differ on
//! segments and single points, so a floating point classifier would get the
//! boundaries wrong.

mod exponents;
mod geometry;
mod pair;
mod points;
mod region;

pub use exponents::{gamma, gamma_branch, omega, BranchReport, GammaBranch, Omega};
pub use geometry::{convex_hull, hull_contains, on_segment, on_segment_half_open};
pub use pair::{parse_rational, ExactInt, ExponentPair};
pub use points::{critical_points, CriticalPoints};
pub use region::{classify, classify_fractional, Classification, DimensionOrder, RegionLabel};

use num_rational::Ratio;

/// `n / d` as an exact rational over `I`.
pub(crate) fn rat<I: ExactInt>(n: i64, d: i64) -> Ratio<I> {
    Ratio::new(
        I::from_i64(n).expect("numerator fits"),
        I::from_i64(d).expect("denominator fits"),
    )
}

pub(crate) fn int<I: ExactInt>(n: i64) -> Ratio<I> {
    Ratio::from_integer(I::from_i64(n).expect("integer fits"))
}
