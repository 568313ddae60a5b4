//! The spectral side of the estimates: the size function `κ(z)`, the regions
//! `Z(ℓ) = {z ∉ [0, ∞) : κ(z) ≤ ℓ}`, their shapes and boundaries, and the
//! eigenvalue exclusion they imply for small potentials.

mod boundary;
mod enclosure;
mod query;
mod shape;

pub use boundary::{boundary_sample, BoundaryPolyline, Window};
pub use enclosure::{eigenvalue_enclosure, Enclosure};
pub use query::{kappa, kappa_literal, membership, RegionQuery, SpectralParameter};
pub use shape::{shape_classify, ShapeClass, ShapeReport};
