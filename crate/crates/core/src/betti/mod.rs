//! First-Betti-number estimation from a finite sample via the rank of the
//! degree-1 homology map between Rips complexes at two scales.

mod complex;
mod estimate;
mod persistence;

pub use complex::{
    rips_two_skeleton, rips_two_skeleton_guarded, DistanceMatrix, FilteredComplex, Simplex,
    DEFAULT_SIZE_GUARD,
};
pub use estimate::{betti1_between_scales, betti1_between_scales_guarded};
pub use persistence::{betti1_at_scale, h1_persistence, PersistencePair};
