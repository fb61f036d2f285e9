//! Reconstruction quality: sampled-pair distortion statistics and the
//! closed-form approximation bounds.

mod bounds;
mod distortion;
mod pairs;

pub use bounds::{band_diameter_bound, bound_alpha_reeb, bound_reeb, BoundInputs, BoundVariant};
pub use distortion::{distortion_report, DistortionReport};
pub use pairs::{sample_component_pairs, sample_pairs};
