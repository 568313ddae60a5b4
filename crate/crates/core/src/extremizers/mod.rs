//! Lower-bound test functions: the Knapp example concentrated on a thin cap of
//! the unit sphere, and the radial example concentrated on a shell.

mod bump;
mod knapp;
mod spherical;

pub use bump::{phi, psi, smooth_step};
pub use knapp::{
    knapp_box, knapp_constants, knapp_field, knapp_grid, knapp_hat, knapp_phase_margin, KnappBox, KnappConstants,
    KnappSpec,
};
pub use spherical::{
    measurement_annuli, spherical_constants, spherical_profile_hat, Annulus, SphericalProfile, SphericalSpec,
};
