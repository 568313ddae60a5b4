use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::field::{Axis, Domain, GridField, GridSpec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// JSON description stored next to the raw samples.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldSidecar {
    pub d: usize,
    pub n: Vec<usize>,
    #[serde(rename = "L")]
    pub length: Vec<f64>,
    #[serde(default)]
    pub carrier: Vec<f64>,
    pub domain: Domain,
    pub format: String,
}

fn paths(stem: &Path) -> (PathBuf, PathBuf) {
    (stem.with_extension("bin"), stem.with_extension("json"))
}

/// Writes `<stem>.bin` (little-endian `f32` re/im pairs) and `<stem>.json`.
pub fn write_field<S: Scalar>(field: &GridField<S>, stem: &Path) -> Result<()> {
    let (bin, json) = paths(stem);
    let mut bytes = Vec::with_capacity(field.values().len() * 8);
    for v in field.values() {
        bytes.extend_from_slice(&(v.re.as_f64() as f32).to_le_bytes());
        bytes.extend_from_slice(&(v.im.as_f64() as f32).to_le_bytes());
    }
    fs::write(bin, bytes)?;
    let g = field.grid();
    let meta = FieldSidecar {
        d: g.d(),
        n: g.axes().iter().map(|a| a.n).collect(),
        length: g.axes().iter().map(|a| a.length.as_f64()).collect(),
        carrier: g.axes().iter().map(|a| a.carrier.as_f64()).collect(),
        domain: field.domain(),
        format: "complex64-le".into(),
    };
    fs::write(json, serde_json::to_string_pretty(&meta)?)?;
    Ok(())
}

pub fn read_field<S: Scalar>(stem: &Path) -> Result<GridField<S>> {
    let (bin, json) = paths(stem);
    let meta: FieldSidecar = serde_json::from_str(&fs::read_to_string(json)?)?;
    if meta.n.len() != meta.d || meta.length.len() != meta.d {
        return Err(Error::Parse("sidecar axis lists do not match d".into()));
    }
    let carrier = if meta.carrier.is_empty() { vec![0.0; meta.d] } else { meta.carrier.clone() };
    let axes = (0..meta.d)
        .map(|i| Axis::with_carrier(meta.n[i], S::lit(meta.length[i]), S::lit(carrier.get(i).copied().unwrap_or(0.0))))
        .collect();
    let grid = Arc::new(GridSpec::new(axes)?);
    let bytes = fs::read(bin)?;
    if bytes.len() != grid.len() * 8 {
        return Err(Error::Parse(format!("expected {} bytes, found {}", grid.len() * 8, bytes.len())));
    }
    let values = bytes
        .chunks_exact(8)
        .map(|c| {
            let re = f32::from_le_bytes([c[0], c[1], c[2], c[3]]);
            let im = f32::from_le_bytes([c[4], c[5], c[6], c[7]]);
            Complex::new(S::lit(re as f64), S::lit(im as f64))
        })
        .collect();
    GridField::new(grid, meta.domain, values)
}
