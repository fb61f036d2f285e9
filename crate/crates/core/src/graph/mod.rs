//! Weighted-graph primitives the reconstruction pipeline rests on: the
//! neighborhood graph, union-find, shortest paths, connected components,
//! first Betti numbers and edge-length counts.

mod components;
mod metric;
mod metric_io;
mod sssp;
mod union_find;

pub use components::{component_members, connected_components};
pub use metric::{MetricEdge, MetricGraph, MetricNode};
pub use sssp::sssp;
pub use union_find::UnionFind;

use crate::error::{Error, Result};

/// Undirected weighted graph over vertices `0..vertex_count`.
///
/// Edge lengths are strictly positive and there are no self-loops or
/// duplicate undirected edges.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl NeighborGraph {
    /// Builds a graph from an edge list, validating the invariants.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for &(u, v, len) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidParameter {
                    name: "edges",
                    msg: format!("edge ({u}, {v}) out of range for {vertex_count} vertices"),
                });
            }
            if u == v {
                return Err(Error::InvalidParameter {
                    name: "edges",
                    msg: format!("self-loop at vertex {u}"),
                });
            }
            if !(len > 0.0) || !len.is_finite() {
                return Err(Error::InvalidParameter {
                    name: "edges",
                    msg: format!("edge ({u}, {v}) has non-positive length {len}"),
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidParameter {
                    name: "edges",
                    msg: format!("duplicate undirected edge ({u}, {v})"),
                });
            }
        }
        Ok(NeighborGraph {
            vertex_count,
            edges,
        })
    }

    /// Path graph `0-1-..-(n-1)` with unit edge lengths.
    pub fn path(n: usize) -> Self {
        NeighborGraph {
            vertex_count: n,
            edges: (1..n).map(|i| (i - 1, i, 1.0)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    /// Adjacency lists `(neighbor, length)`, built on demand.
    pub fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v, len) in &self.edges {
            adj[u].push((v, len));
            adj[v].push((u, len));
        }
        adj
    }

    /// Number of edges with length at most `threshold`.
    pub fn edge_length_census(&self, threshold: f64) -> usize {
        self.edges.iter().filter(|e| e.2 <= threshold).count()
    }

    /// First Betti number `|E| - |V| + #components`.
    pub fn betti1(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut merges = 0;
        for &(u, v, _) in &self.edges {
            if uf.union(u, v) {
                merges += 1;
            }
        }
        let components = self.vertex_count - merges;
        self.edges.len() + components - self.vertex_count
    }

    /// Extracts the subgraph induced by `vertices` (which must be sorted and
    /// deduplicated), remapping vertex ids to `0..vertices.len()`.
    pub fn induced(&self, vertices: &[usize]) -> NeighborGraph {
        let mut index = vec![usize::MAX; self.vertex_count];
        for (local, &v) in vertices.iter().enumerate() {
            index[v] = local;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v, _)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v, len)| (index[u], index[v], len))
            .collect();
        NeighborGraph {
            vertex_count: vertices.len(),
            edges,
        }
    }
}

/// Per-vertex graph distance to a root vertex. Vertices unreachable from the
/// root carry `None` rather than a sentinel value.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    pub values: Vec<Option<f64>>,
    pub root: usize,
}

impl ScalarField {
    pub fn value(&self, v: usize) -> Option<f64> {
        self.values[v]
    }

    /// Largest finite value, 0.0 for a single reachable root.
    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .flatten()
            .fold(0.0_f64, |acc, &v| acc.max(v))
    }

    pub fn all_reachable(&self) -> bool {
        self.values.iter().all(|v| v.is_some())
    }
}
