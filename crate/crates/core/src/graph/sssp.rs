use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{NeighborGraph, ScalarField};

#[derive(PartialEq)]
struct State {
    dist: f64,
    vertex: usize,
}

impl Eq for State {}

impl Ord for State {
    fn cmp(&self, other: &Self) -> Ordering {
        // Min-heap on distance; ties broken by vertex id for determinism.
        other
            .dist
            .partial_cmp(&self.dist)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for State {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Single-source shortest paths from `root` with binary-heap Dijkstra.
/// Edge lengths are positive by the graph invariant.
pub fn sssp(graph: &NeighborGraph, root: usize) -> ScalarField {
    assert!(root < graph.vertex_count(), "root out of range");
    let adj = graph.adjacency();
    let mut dist: Vec<Option<f64>> = vec![None; graph.vertex_count()];
    let mut heap = BinaryHeap::new();
    dist[root] = Some(0.0);
    heap.push(State {
        dist: 0.0,
        vertex: root,
    });

    while let Some(State { dist: d, vertex: u }) = heap.pop() {
        if dist[u].is_some_and(|best| d > best) {
            continue;
        }
        for &(v, len) in &adj[u] {
            let cand = d + len;
            if dist[v].is_none_or(|best| cand < best) {
                dist[v] = Some(cand);
                heap.push(State {
                    dist: cand,
                    vertex: v,
                });
            }
        }
    }

    ScalarField { values: dist, root }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances() {
        let g = NeighborGraph::new(3, vec![(0, 1, 1.0), (1, 2, 2.5)]).unwrap();
        let d = sssp(&g, 0);
        assert_eq!(d.values, vec![Some(0.0), Some(1.0), Some(3.5)]);
    }

    #[test]
    fn triangle_distances() {
        let g = NeighborGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let d = sssp(&g, 0);
        assert_eq!(d.values, vec![Some(0.0), Some(1.0), Some(1.0)]);
    }

    #[test]
    fn unreachable_is_none() {
        let g = NeighborGraph::new(3, vec![(0, 1, 1.0)]).unwrap();
        let d = sssp(&g, 0);
        assert_eq!(d.values[2], None);
        assert!(!d.all_reachable());
    }

    #[test]
    fn triangle_inequality_on_edges() {
        let g = NeighborGraph::new(
            5,
            vec![
                (0, 1, 0.5),
                (1, 2, 1.5),
                (2, 3, 0.7),
                (3, 4, 2.0),
                (0, 4, 1.1),
                (1, 3, 0.9),
            ],
        )
        .unwrap();
        let d = sssp(&g, 0);
        for &(u, v, len) in g.edges() {
            let (du, dv) = (d.values[u].unwrap(), d.values[v].unwrap());
            assert!((du - dv).abs() <= len + 1e-12);
        }
    }
}
