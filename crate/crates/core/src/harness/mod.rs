//! Orchestration used by the command-line tool: classification records,
//! shape tables, figure data, scaling sweeps with slope fits, and the
//! eigenvalue-enclosure demo.

mod eigenbox;
mod fit;
mod records;
mod svg;
mod sweep;

pub use eigenbox::{run_eigenbox, DiscreteSchrodinger, EigenRecord, EigenboxConfig, EigenboxReport, PotentialPreset};
pub use fit::{slope_fit, SlopeFit};
pub use records::{
    atlas_outlines, atlas_svg, classify_record, figure_gallery, gamma_record, region_record, shapes_table,
    ClassifyRecord, GalleryItem, GammaRecord, Outline, RegionRecord, ShapeRow,
};
pub use svg::{polylines_svg, View};
pub use sweep::{run_sweep, Experiment, SweepPlan, SweepPoint, SweepReport};
