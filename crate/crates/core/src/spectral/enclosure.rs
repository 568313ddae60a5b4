use serde::Serialize;

use super::{membership, RegionQuery, SpectralParameter};
use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// Outcome of the small-potential eigenvalue test.
///
/// The constant `c` of the resolvent bound is not explicit; enclosures are only
/// as rigorous as the value supplied for it.
#[derive(Clone, Debug, Serialize)]
pub struct Enclosure<S: Scalar> {
    pub admissible: bool,
    /// Largest potential norm allowed: `t / (c ℓ)`.
    pub threshold: S,
    pub potential_norm: S,
    pub query: RegionQuery<S>,
}

impl<S: Scalar> Enclosure<S> {
    /// `z` cannot be an eigenvalue: the hypothesis holds and `z ∈ Z(ℓ)`.
    pub fn excludes(&self, z: &SpectralParameter<S>) -> bool {
        self.admissible && membership(&self.query, z)
    }

    /// `z` is allowed by the enclosure (always true when the test is inadmissible).
    pub fn may_contain(&self, z: &SpectralParameter<S>) -> bool {
        !self.excludes(z)
    }
}

/// Checks `‖V‖_{L^{1/(x−y)}} ≤ t / (c ℓ)` and exposes `ℂ \ Z(ℓ)` as the enclosure.
pub fn eigenvalue_enclosure<S: Scalar>(query: &RegionQuery<S>, potential_norm: S, c: S, t: S) -> Result<Enclosure<S>> {
    if !(t > S::zero() && t < S::one()) {
        return domain(format!("t = {t} must lie in (0, 1)"));
    }
    if !(c > S::zero()) {
        return domain(format!("constant C = {c} must be positive"));
    }
    if !(potential_norm >= S::zero()) {
        return domain("potential norm must be nonnegative");
    }
    if query.on_sobolev_line() && query.ell < S::one() {
        return domain("on the line x - y = s/d the region needs ell >= 1");
    }
    let threshold = t / (c * query.ell);
    Ok(Enclosure { admissible: potential_norm <= threshold, threshold, potential_norm, query: query.clone() })
}
