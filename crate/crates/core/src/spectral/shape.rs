use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::RegionQuery;
use crate::scalar::Scalar;

/// Qualitative shape of `Z(ℓ)` with its closed-form parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "shape")]
pub enum ShapeClass<S: Scalar> {
    /// `ℂ \ [0, ∞)`.
    FullComplement,
    Empty,
    /// `{|z| ≥ radius}`.
    DiskComplement { radius: S },
    /// Complement of the `width`-neighborhood of `[0, ∞)`.
    UniformNeighborhood { width: S },
    /// Complement of a neighborhood of `[0, ∞)` that thins out as `Re z → ∞`.
    ShrinkingNeighborhood,
    /// Complement of a neighborhood growing like `(Re z)^{1 − ω/γ}`.
    WideningNeighborhood,
    /// `{Re z ≤ 0} \ {0}`.
    PuncturedHalfPlane,
    /// Complement of the cone `|arg z| < half_angle`.
    ConeComplement { half_angle: S },
}

impl<S: Scalar> ShapeClass<S> {
    pub fn name(&self) -> &'static str {
        match self {
            Self::FullComplement => "FullComplement",
            Self::Empty => "Empty",
            Self::DiskComplement { .. } => "DiskComplement",
            Self::UniformNeighborhood { .. } => "UniformNeighborhood",
            Self::ShrinkingNeighborhood => "ShrinkingNeighborhood",
            Self::WideningNeighborhood => "WideningNeighborhood",
            Self::PuncturedHalfPlane => "PuncturedHalfPlane",
            Self::ConeComplement { .. } => "ConeComplement",
        }
    }

    /// Full opening angle `2·half_angle` of a removed cone.
    pub fn apex_angle(&self) -> Option<S> {
        match self {
            Self::ConeComplement { half_angle } => Some(*half_angle + *half_angle),
            _ => None,
        }
    }

    pub fn parameters(&self) -> BTreeMap<String, f64> {
        let mut m = BTreeMap::new();
        match self {
            Self::DiskComplement { radius } => {
                m.insert("radius".into(), radius.as_f64());
            }
            Self::UniformNeighborhood { width } => {
                m.insert("width".into(), width.as_f64());
            }
            Self::ConeComplement { half_angle } => {
                m.insert("half_angle".into(), half_angle.as_f64());
                m.insert("apex_angle".into(), 2.0 * half_angle.as_f64());
            }
            _ => {}
        }
        m
    }
}

impl<S: Scalar> fmt::Display for ShapeClass<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        let p = self.parameters();
        if !p.is_empty() {
            let parts: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "{{{}}}", parts.join(", "))?;
        }
        Ok(())
    }
}

pub fn shape_classify<S: Scalar>(query: &RegionQuery<S>) -> ShapeClass<S> {
    let g = query.gamma();
    let w = query.omega();
    let ell = query.ell;
    let one = S::one();
    if w.is_zero() {
        if ell < one {
            ShapeClass::Empty
        } else if g.is_zero() {
            ShapeClass::FullComplement
        } else if ell == one {
            ShapeClass::PuncturedHalfPlane
        } else {
            ShapeClass::ConeComplement { half_angle: ell.powf(-one / query.gamma_f()).asin() }
        }
    } else if g.is_zero() {
        ShapeClass::DiskComplement { radius: ell.powf(-one / query.omega_f()) }
    } else if g == w {
        ShapeClass::UniformNeighborhood { width: ell.powf(-one / query.gamma_f()) }
    } else if (g - w).is_negative() {
        ShapeClass::ShrinkingNeighborhood
    } else {
        ShapeClass::WideningNeighborhood
    }
}

/// JSON record for a classified region.
#[derive(Clone, Debug, Serialize)]
pub struct ShapeReport {
    pub shape: String,
    pub parameters: BTreeMap<String, f64>,
    pub gamma: String,
    pub omega: String,
    pub d: u32,
    pub s: String,
    pub pair: [String; 2],
    pub ell: f64,
    pub region: Option<String>,
    /// Large-`Re z` exponent `1 − ω/γ` of the boundary, when `γ > 0`.
    pub boundary_slope: Option<f64>,
}

impl ShapeReport {
    pub fn new<S: Scalar>(query: &RegionQuery<S>) -> Self {
        let shape = shape_classify(query);
        let slope = (!query.gamma().is_zero()).then(|| 1.0 - query.omega_f().as_f64() / query.gamma_f().as_f64());
        Self {
            shape: shape.name().into(),
            parameters: shape.parameters(),
            gamma: query.gamma().to_string(),
            omega: query.omega().to_string(),
            d: query.d,
            s: query.s.to_string(),
            pair: [query.pair.x().to_string(), query.pair.y().to_string()],
            ell: query.ell.as_f64(),
            region: query.classification().map(|c| c.to_string()),
            boundary_slope: slope,
        }
    }
}
