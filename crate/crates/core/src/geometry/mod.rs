//! Raw-data ingestion and preprocessing: point clouds, traces, the file
//! formats, neighborhood-graph construction and sampling utilities.

mod io;
mod rips;
mod sampling;
mod traces;

pub use io::{load, load_edge_list, load_points_csv, load_trace_set, Format, LoadedInput};
pub use rips::build_rips_graph;
pub use sampling::{density_filter, farthest_point_net};
pub use traces::{delay_embed, resample_trace, stack_traces};

use crate::error::{Error, Result};

/// Finite set of points in d-dimensional Euclidean space, stored flat.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    coords: Vec<f64>,
    dim: usize,
}

impl PointCloud {
    /// Builds a cloud, validating that every point has dimension `dim` and
    /// all coordinates are finite.
    pub fn new(coords: Vec<f64>, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter {
                name: "dim",
                msg: "dimension must be at least 1".into(),
            });
        }
        if coords.len() % dim != 0 {
            return Err(Error::InvalidParameter {
                name: "coords",
                msg: format!("{} coordinates do not fill points of dimension {dim}", coords.len()),
            });
        }
        if let Some(bad) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "coords",
                msg: format!("non-finite coordinate at point {}", bad / dim),
            });
        }
        Ok(PointCloud { coords, dim })
    }

    pub fn from_points(points: &[Vec<f64>]) -> Result<Self> {
        let dim = points.first().map_or(1, Vec::len);
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::Dimension {
                    line: i + 1,
                    got: p.len(),
                    expected: dim,
                });
            }
        }
        PointCloud::new(points.concat(), dim)
    }

    pub fn empty(dim: usize) -> Self {
        PointCloud {
            coords: Vec::new(),
            dim,
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn push(&mut self, point: &[f64]) {
        debug_assert_eq!(point.len(), self.dim);
        self.coords.extend_from_slice(point);
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        euclidean(self.point(i), self.point(j))
    }

    /// Cloud restricted to the given indices, in the given order.
    pub fn select(&self, indices: &[usize]) -> PointCloud {
        let mut out = PointCloud::empty(self.dim);
        for &i in indices {
            out.push(self.point(i));
        }
        out
    }
}

pub(crate) fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Time-ordered sequence of positions, e.g. one GPS trace.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub points: PointCloud,
}

impl Trace {
    pub fn new(points: PointCloud) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput("trace"));
        }
        Ok(Trace { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points.dim()
    }

    /// Total polyline arc length.
    pub fn arc_length(&self) -> f64 {
        (1..self.len())
            .map(|i| self.points.distance(i - 1, i))
            .sum()
    }
}
