use rayon::prelude::*;
use serde::Serialize;

use super::field::GridField;
use super::symbol::{apply_symbol, SymbolSpec};
use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// A norm value as emitted in JSON reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormRecord {
    pub kind: &'static str,
    pub exponent: f64,
    pub value: f64,
}

/// `(μ Σ |f|^p)^{1/p}` with `μ` the cell measure; the max norm for `p = ∞`.
pub fn lp_norm<S: Scalar>(field: &GridField<S>, p: S) -> Result<S> {
    if !(p >= S::one()) {
        return domain(format!("lp norm needs p >= 1 (got {p})"));
    }
    let v = field.values();
    let peak = v.par_iter().map(|c| c.norm()).reduce(S::zero, S::max);
    if p.is_infinite() {
        return Ok(peak);
    }
    if peak.is_zero() {
        return Ok(S::zero());
    }
    // Factor out the peak so large p does not overflow.
    let sum = v.par_iter().map(|c| (c.norm() / peak).powf(p)).reduce(S::zero, |a, b| a + b);
    Ok(peak * (sum * field.cell_measure()).powf(p.recip()))
}

fn sorted_moduli<S: Scalar>(field: &GridField<S>) -> Vec<S> {
    let mut a: Vec<S> = field.values().par_iter().map(|c| c.norm()).collect();
    a.par_sort_unstable_by(|x, y| y.partial_cmp(x).expect("finite field"));
    a
}

fn check_open<S: Scalar>(name: &str, e: S) -> Result<()> {
    if !(e > S::one()) || !e.is_finite() {
        return domain(format!("{name} needs an exponent in (1, inf) (got {e})"));
    }
    Ok(())
}

/// `max_k a_k (k μ)^{1/q}` over the decreasing rearrangement.
pub fn weak_lq_quasinorm<S: Scalar>(field: &GridField<S>, q: S) -> Result<S> {
    check_open("weak lq", q)?;
    let mu = field.cell_measure();
    Ok(sorted_moduli(field)
        .iter()
        .enumerate()
        .map(|(k, &a)| a * (S::from_usize_lossy(k + 1) * mu).powf(q.recip()))
        .fold(S::zero(), S::max))
}

/// `Σ_k (a_k − a_{k+1}) (k μ)^{1/p}` with `a_{N+1} = 0`.
pub fn lorentz_p1_norm<S: Scalar>(field: &GridField<S>, p: S) -> Result<S> {
    check_open("lorentz", p)?;
    let mu = field.cell_measure();
    let a = sorted_moduli(field);
    let mut total = S::zero();
    for k in 0..a.len() {
        let next = a.get(k + 1).copied().unwrap_or(S::zero());
        total = total + (a[k] - next) * (S::from_usize_lossy(k + 1) * mu).powf(p.recip());
    }
    Ok(total)
}

/// `‖m(D) f‖_q / ‖f‖_p`, a lower bound for the discrete operator norm.
pub fn operator_ratio<S: Scalar>(input: &GridField<S>, symbol: &SymbolSpec<S>, p: S, q: S) -> Result<S> {
    let denom = lp_norm(input, p)?;
    if denom.is_zero() {
        return domain("operator ratio of a zero input");
    }
    Ok(lp_norm(&apply_symbol(input, symbol)?, q)? / denom)
}
