//! Exact planar predicates on rational points.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::ExactInt;

type Pt<I> = (Ratio<I>, Ratio<I>);

fn cross<I: ExactInt>(o: &Pt<I>, a: &Pt<I>, b: &Pt<I>) -> Ratio<I> {
    (a.0.clone() - o.0.clone()) * (b.1.clone() - o.1.clone())
        - (a.1.clone() - o.1.clone()) * (b.0.clone() - o.0.clone())
}

/// Closed segment `[a, b]` membership.
pub fn on_segment<I: ExactInt>(p: &Pt<I>, a: &Pt<I>, b: &Pt<I>) -> bool {
    if !cross(a, b, p).is_zero() {
        return false;
    }
    let within = |v: &Ratio<I>, lo: &Ratio<I>, hi: &Ratio<I>| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= v && v <= hi
    };
    within(&p.0, &a.0, &b.0) && within(&p.1, &a.1, &b.1)
}

/// Half-open segment `[a, b) = [a, b] \ {b}`.
pub fn on_segment_half_open<I: ExactInt>(p: &Pt<I>, a: &Pt<I>, b: &Pt<I>) -> bool {
    p != b && on_segment(p, a, b)
}

/// Convex hull in counter-clockwise order, collinear points dropped.
/// Degenerate inputs give one vertex (a point) or two (a segment).
pub fn convex_hull<I: ExactInt>(points: &[Pt<I>]) -> Vec<Pt<I>> {
    let mut pts: Vec<Pt<I>> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Pt<I>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Pt<I>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 || (lower.len() > 2 && lower.iter().skip(2).all(|p| cross(&lower[0], &lower[1], p).is_zero())) {
        // all collinear: keep the extreme points
        let first = pts.first().cloned().unwrap();
        let last = pts.last().cloned().unwrap();
        return vec![first, last];
    }
    lower
}

/// Membership in the closed convex hull `[v_1, …, v_k]`.
///
/// A hull that degenerates to a segment or a point is treated as exactly that set.
pub fn hull_contains<I: ExactInt>(vertices: &[Pt<I>], p: &Pt<I>) -> bool {
    let hull = convex_hull(vertices);
    match hull.len() {
        0 => false,
        1 => &hull[0] == p,
        2 => on_segment(p, &hull[0], &hull[1]),
        n => (0..n).all(|i| !cross(&hull[i], &hull[(i + 1) % n], p).is_negative()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i64, b: i64, c: i64, d: i64) -> Pt<i64> {
        (Ratio::new(a, b), Ratio::new(c, d))
    }

    #[test]
    fn square_hull_membership() {
        let sq = [pt(0, 1, 0, 1), pt(1, 1, 0, 1), pt(1, 1, 1, 1), pt(0, 1, 1, 1), pt(1, 2, 1, 2)];
        assert_eq!(convex_hull(&sq).len(), 4);
        assert!(hull_contains(&sq, &pt(1, 2, 0, 1)));
        assert!(hull_contains(&sq, &pt(1, 3, 2, 3)));
        assert!(!hull_contains(&sq, &pt(3, 2, 1, 2)));
    }

    #[test]
    fn degenerate_hulls() {
        let point = [pt(1, 4, 1, 4), pt(1, 4, 1, 4), pt(1, 4, 1, 4)];
        assert!(hull_contains(&point, &pt(1, 4, 1, 4)));
        assert!(!hull_contains(&point, &pt(1, 4, 1, 3)));

        let seg = [pt(0, 1, 0, 1), pt(1, 2, 1, 2), pt(1, 1, 1, 1)];
        assert_eq!(convex_hull(&seg).len(), 2);
        assert!(hull_contains(&seg, &pt(1, 3, 1, 3)));
        assert!(!hull_contains(&seg, &pt(1, 3, 1, 4)));
    }

    #[test]
    fn half_open_segment_drops_endpoint() {
        let a = pt(0, 1, 0, 1);
        let b = pt(1, 1, 1, 1);
        assert!(on_segment_half_open(&a, &a, &b));
        assert!(!on_segment_half_open(&b, &a, &b));
        assert!(on_segment(&b, &a, &b));
    }
}
