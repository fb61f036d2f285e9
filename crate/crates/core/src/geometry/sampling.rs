use super::PointCloud;
use crate::error::{Error, Result};

/// Greedy farthest-point traversal starting at index 0. Stops once the
/// farthest remaining point is within `epsilon` of the selected set, so the
/// landmarks form a metric epsilon-net: every point is within `epsilon` of a
/// landmark and landmarks are pairwise more than `epsilon` apart.
pub fn farthest_point_net(cloud: &PointCloud, epsilon: f64) -> Result<Vec<usize>> {
    if cloud.is_empty() {
        return Err(Error::EmptyInput("point cloud"));
    }
    if !(epsilon > 0.0) {
        return Err(Error::InvalidParameter {
            name: "epsilon",
            msg: format!("must be positive, got {epsilon}"),
        });
    }

    let n = cloud.len();
    let mut landmarks = vec![0usize];
    let mut dist_to_set: Vec<f64> = (0..n).map(|i| cloud.distance(0, i)).collect();

    loop {
        let (farthest, &d) = dist_to_set
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap().then(b.0.cmp(&a.0)))
            .unwrap();
        if d <= epsilon {
            return Ok(landmarks);
        }
        landmarks.push(farthest);
        for i in 0..n {
            let d = cloud.distance(farthest, i);
            if d < dist_to_set[i] {
                dist_to_set[i] = d;
            }
        }
    }
}

/// Removes points whose k-th nearest-neighbor distance exceeds the given
/// quantile of the k-NN-distance distribution. A brute-force scan; intended
/// for offline preprocessing at desk scale.
pub fn density_filter(cloud: &PointCloud, k: usize, quantile: f64) -> Result<PointCloud> {
    let n = cloud.len();
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter {
            name: "k",
            msg: format!("need 1 <= k < {n}, got {k}"),
        });
    }
    if !(0.0..1.0).contains(&quantile) {
        return Err(Error::InvalidParameter {
            name: "quantile",
            msg: format!("need 0 <= quantile < 1, got {quantile}"),
        });
    }

    let knn: Vec<f64> = (0..n)
        .map(|i| {
            let mut dists: Vec<f64> = (0..n)
                .filter(|&j| j != i)
                .map(|j| cloud.distance(i, j))
                .collect();
            dists.sort_by(|a, b| a.partial_cmp(b).unwrap());
            dists[k - 1]
        })
        .collect();

    let mut sorted = knn.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let threshold = sorted[(quantile * (n - 1) as f64).floor() as usize];

    let keep: Vec<usize> = (0..n).filter(|&i| knn[i] <= threshold).collect();
    Ok(cloud.select(&keep))
}
