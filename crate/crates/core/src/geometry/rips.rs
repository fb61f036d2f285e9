use std::collections::HashMap;

use super::PointCloud;
use crate::error::{Error, Result};
use crate::graph::NeighborGraph;

/// Builds the Rips graph at the given radius: vertices are cloud indices and
/// an edge `(u, v)` of length `|p_u - p_v|` is present iff
/// `0 < |p_u - p_v| <= radius`. Coincident points produce no edge.
///
/// Candidate pairs come from a uniform grid over the first (at most three)
/// coordinates with cell size `radius`; a projection never increases the
/// Euclidean distance, so the grid only over-approximates and every candidate
/// is checked against the full-dimension distance.
pub fn build_rips_graph(cloud: &PointCloud, radius: f64) -> Result<NeighborGraph> {
    if cloud.is_empty() {
        return Err(Error::EmptyInput("point cloud"));
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::InvalidParameter {
            name: "radius",
            msg: format!("must be positive, got {radius}"),
        });
    }

    let n = cloud.len();
    let key_dim = cloud.dim().min(3);
    let cell = |p: &[f64]| -> [i64; 3] {
        let mut key = [0i64; 3];
        for (k, slot) in key.iter_mut().enumerate().take(key_dim) {
            *slot = (p[k] / radius).floor() as i64;
        }
        key
    };

    let mut grid: HashMap<[i64; 3], Vec<usize>> = HashMap::new();
    for i in 0..n {
        grid.entry(cell(cloud.point(i))).or_default().push(i);
    }

    let mut edges = Vec::new();
    let mut neighbor_offsets = Vec::new();
    build_offsets(key_dim, &mut [0i64; 3], 0, &mut neighbor_offsets);

    for i in 0..n {
        let base = cell(cloud.point(i));
        for offset in &neighbor_offsets {
            let key = [base[0] + offset[0], base[1] + offset[1], base[2] + offset[2]];
            let Some(bucket) = grid.get(&key) else {
                continue;
            };
            for &j in bucket {
                if j <= i {
                    continue;
                }
                let d = cloud.distance(i, j);
                if d > 0.0 && d <= radius {
                    edges.push((i, j, d));
                }
            }
        }
    }

    edges.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    NeighborGraph::new(n, edges)
}

fn build_offsets(key_dim: usize, current: &mut [i64; 3], axis: usize, out: &mut Vec<[i64; 3]>) {
    if axis == key_dim {
        out.push(*current);
        return;
    }
    for step in -1..=1 {
        current[axis] = step;
        build_offsets(key_dim, current, axis + 1, out);
    }
    current[axis] = 0;
}
