use crate::scalar::Scalar;

fn b<S: Scalar>(t: S) -> S {
    if t > S::zero() {
        (-t.recip()).exp()
    } else {
        S::zero()
    }
}

/// Smooth step: `0` for `t ≤ 0`, `1` for `t ≥ 1`, and `S(t) + S(1 − t) = 1`.
pub fn smooth_step<S: Scalar>(t: S) -> S {
    let (l, r) = (b(t), b(S::one() - t));
    l / (l + r)
}

/// Plateau bump on `[−1, 1]`, identically `1` on `[−1/2, 1/2]`.
pub fn phi<S: Scalar>(t: S) -> S {
    smooth_step(S::lit(2.0) * (S::one() - t.abs()))
}

/// Plateau bump on `[1/4, 1]`, identically `1` on `[1/2, 3/4]`.
pub fn psi<S: Scalar>(t: S) -> S {
    let four = S::lit(4.0);
    smooth_step(four * t - S::one()) * smooth_step(four - four * t)
}
