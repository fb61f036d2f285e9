use super::complex::{rips_two_skeleton_guarded, DistanceMatrix, DEFAULT_SIZE_GUARD};
use super::persistence::h1_persistence;
use crate::error::{Error, Result};

/// Rank of the inclusion-induced map `H1(Rips(D, alpha)) -> H1(Rips(D,
/// 3*alpha))`: the number of degree-1 classes born at or below `alpha` that
/// survive strictly past `3*alpha`.
///
/// When the sample is close enough to a metric graph and `alpha` sits inside
/// the valid window (above the sampling scale, with `3*alpha` below the
/// filling scale of the shortest essential loop), this rank equals the first
/// Betti number of the graph. The rank is reported unconditionally; the
/// hypothesis is not checkable from the data alone.
pub fn betti1_between_scales(metric: &DistanceMatrix, alpha: f64) -> Result<usize> {
    betti1_between_scales_guarded(metric, alpha, DEFAULT_SIZE_GUARD)
}

pub fn betti1_between_scales_guarded(
    metric: &DistanceMatrix,
    alpha: f64,
    guard: usize,
) -> Result<usize> {
    if !(alpha > 0.0) {
        return Err(Error::InvalidParameter {
            name: "alpha",
            msg: format!("must be positive, got {alpha}"),
        });
    }
    let complex = rips_two_skeleton_guarded(metric, 3.0 * alpha, guard)?;
    let pairs = h1_persistence(&complex);
    Ok(pairs
        .iter()
        .filter(|p| p.birth <= alpha && p.death > 3.0 * alpha)
        .count())
}
