//! Periodic grids, continuum-normalized discrete Fourier transforms, radial
//! multipliers and discrete Lebesgue/Lorentz norms.
//!
//! Each axis carries its own size `n`, period `L` and a frequency carrier `c`:
//! the sample points are `x_j = −L/2 + jL/n` and the frequencies
//! `ξ_k = c + 2πk/L` for `k ∈ [−n/2, n/2)`. A nonzero carrier lets a grid
//! resolve a small frequency box far from the origin without sampling the
//! whole ball it sits in.

mod field;
mod io;
mod norms;
mod symbol;
mod transform;

pub use field::{Axis, Domain, GridField, GridSpec, DEFAULT_BUDGET};
pub use io::{read_field, write_field, FieldSidecar};
pub use norms::{lorentz_p1_norm, lp_norm, operator_ratio, weak_lq_quasinorm, NormRecord};
pub use symbol::{apply_symbol, apply_symbol_hat, SymbolSpec};
pub use transform::{evaluate_at, forward_transform, inverse_transform};
