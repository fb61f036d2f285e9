use crate::error::{Error, Result};
use crate::geometry::PointCloud;

/// Default cap on the number of input points for Rips constructions; the
/// 2-skeleton grows cubically.
pub const DEFAULT_SIZE_GUARD: usize = 400;

/// Dense symmetric distance matrix.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    values: Vec<f64>,
}

impl DistanceMatrix {
    pub fn from_fn(n: usize, mut dist: impl FnMut(usize, usize) -> f64) -> Self {
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = dist(i, j);
                values[i * n + j] = d;
                values[j * n + i] = d;
            }
        }
        DistanceMatrix { n, values }
    }

    pub fn from_cloud(cloud: &PointCloud) -> Self {
        Self::from_fn(cloud.len(), |i, j| cloud.distance(i, j))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }
}

/// Simplex of dimension at most 2, vertices strictly ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Simplex {
    Vertex(usize),
    Edge(usize, usize),
    Triangle(usize, usize, usize),
}

impl Simplex {
    pub fn dimension(&self) -> usize {
        match self {
            Simplex::Vertex(_) => 0,
            Simplex::Edge(..) => 1,
            Simplex::Triangle(..) => 2,
        }
    }

    /// Facets of one dimension lower.
    pub fn faces(&self) -> Vec<Simplex> {
        match *self {
            Simplex::Vertex(_) => Vec::new(),
            Simplex::Edge(a, b) => vec![Simplex::Vertex(a), Simplex::Vertex(b)],
            Simplex::Triangle(a, b, c) => vec![
                Simplex::Edge(b, c),
                Simplex::Edge(a, c),
                Simplex::Edge(a, b),
            ],
        }
    }
}

/// Rips filtration restricted to dimensions 0..=2, sorted by
/// (diameter, dimension, vertex order) so every face precedes its cofaces.
#[derive(Debug, Clone)]
pub struct FilteredComplex {
    pub simplices: Vec<(Simplex, f64)>,
}

/// Builds the 2-skeleton of the Rips filtration up to `max_scale`:
/// all vertices, edges with length at most the scale, and triangles whose
/// longest edge is at most the scale. The 2-skeleton determines H1.
pub fn rips_two_skeleton(metric: &DistanceMatrix, max_scale: f64) -> Result<FilteredComplex> {
    rips_two_skeleton_guarded(metric, max_scale, DEFAULT_SIZE_GUARD)
}

pub fn rips_two_skeleton_guarded(
    metric: &DistanceMatrix,
    max_scale: f64,
    guard: usize,
) -> Result<FilteredComplex> {
    if !(max_scale > 0.0) {
        return Err(Error::InvalidParameter {
            name: "max_scale",
            msg: format!("must be positive, got {max_scale}"),
        });
    }
    let n = metric.len();
    if n > guard {
        return Err(Error::SizeGuard { n, guard });
    }

    let mut simplices: Vec<(Simplex, f64)> = (0..n).map(|v| (Simplex::Vertex(v), 0.0)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let d = metric.get(i, j);
            if d <= max_scale {
                simplices.push((Simplex::Edge(i, j), d));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let dij = metric.get(i, j);
            if dij > max_scale {
                continue;
            }
            for k in j + 1..n {
                let diameter = dij.max(metric.get(i, k)).max(metric.get(j, k));
                if diameter <= max_scale {
                    simplices.push((Simplex::Triangle(i, j, k), diameter));
                }
            }
        }
    }

    simplices.sort_by(|(sa, da), (sb, db)| {
        da.partial_cmp(db)
            .unwrap()
            .then(sa.dimension().cmp(&sb.dimension()))
            .then(sa.cmp(sb))
    });
    Ok(FilteredComplex { simplices })
}
