use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::UnionFind;

/// Node of a reconstructed metric graph. `height` is the value of the
/// distance-to-root function at the node.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricNode {
    pub id: usize,
    pub height: f64,
}

/// Edge of a metric graph; parallel edges are allowed (distinct arcs between
/// the same node pair survive the quotient), so edges form a multiset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricEdge {
    pub a: usize,
    pub b: usize,
    pub length: f64,
}

/// Reconstructed metric graph. Node ids are stable: simplification keeps the
/// surviving subset of ids, so lookups made against the unsimplified graph
/// stay meaningful.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricGraph {
    pub nodes: Vec<MetricNode>,
    pub edges: Vec<MetricEdge>,
    pub root_node: usize,
}

impl MetricGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn height(&self, id: usize) -> Option<f64> {
        self.position(id).map(|i| self.nodes[i].height)
    }

    pub fn total_length(&self) -> f64 {
        self.edges.iter().map(|e| e.length).sum()
    }

    /// Number of edges with length at most `threshold`.
    pub fn edge_length_census(&self, threshold: f64) -> usize {
        self.edges.iter().filter(|e| e.length <= threshold).count()
    }

    /// First Betti number `|E| - |V| + #components`.
    pub fn betti1(&self) -> usize {
        let index = self.index_of_ids();
        let mut uf = UnionFind::new(self.nodes.len());
        let mut merges = 0;
        for e in &self.edges {
            if uf.union(index[&e.a], index[&e.b]) {
                merges += 1;
            }
        }
        let components = self.nodes.len() - merges;
        self.edges.len() + components - self.nodes.len()
    }

    /// Shortest-path length between two nodes, `None` if disconnected or if
    /// either id is unknown.
    pub fn distance(&self, a: usize, b: usize) -> Option<f64> {
        let index = self.index_of_ids();
        let (&ia, &ib) = (index.get(&a)?, index.get(&b)?);
        let dist = self.distances_from_index(ia);
        dist[ib]
    }

    /// Shortest-path lengths from node id `from` to every node, in `nodes`
    /// order.
    pub fn distances_from(&self, from: usize) -> Option<Vec<Option<f64>>> {
        let index = self.index_of_ids();
        let &i = index.get(&from)?;
        Some(self.distances_from_index(i))
    }

    fn distances_from_index(&self, start: usize) -> Vec<Option<f64>> {
        let adj = self.adjacency_indexed();
        let mut dist: Vec<Option<f64>> = vec![None; self.nodes.len()];
        let mut heap = BinaryHeap::new();
        dist[start] = Some(0.0);
        heap.push(HeapState {
            dist: 0.0,
            node: start,
        });
        while let Some(HeapState { dist: d, node: u }) = heap.pop() {
            if dist[u].is_some_and(|best| d > best) {
                continue;
            }
            for &(v, len) in &adj[u] {
                let cand = d + len;
                if dist[v].is_none_or(|best| cand < best) {
                    dist[v] = Some(cand);
                    heap.push(HeapState {
                        dist: cand,
                        node: v,
                    });
                }
            }
        }
        dist
    }

    /// Adjacency lists over dense positions (in `nodes` order).
    pub fn adjacency_indexed(&self) -> Vec<Vec<(usize, f64)>> {
        let index = self.index_of_ids();
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            let (ia, ib) = (index[&e.a], index[&e.b]);
            adj[ia].push((ib, e.length));
            adj[ib].push((ia, e.length));
        }
        adj
    }

    /// Map node id -> dense position in `nodes`.
    pub fn index_of_ids(&self) -> std::collections::HashMap<usize, usize> {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.id, i))
            .collect()
    }

    fn position(&self, id: usize) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }
}

#[derive(PartialEq)]
struct HeapState {
    dist: f64,
    node: usize,
}

impl Eq for HeapState {}

impl Ord for HeapState {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .partial_cmp(&self.dist)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for HeapState {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> MetricGraph {
        MetricGraph {
            nodes: (0..4)
                .map(|i| MetricNode {
                    id: i,
                    height: i as f64 * 0.5,
                })
                .collect(),
            edges: (1..4)
                .map(|i| MetricEdge {
                    a: i - 1,
                    b: i,
                    length: 0.5,
                })
                .collect(),
            root_node: 0,
        }
    }

    #[test]
    fn distance_on_chain() {
        let g = chain();
        assert_eq!(g.distance(0, 3), Some(1.5));
        assert_eq!(g.distance(2, 2), Some(0.0));
    }

    #[test]
    fn disconnected_pair_is_none() {
        let mut g = chain();
        g.edges.remove(1);
        assert_eq!(g.distance(0, 3), None);
    }

    #[test]
    fn betti1_counts_parallel_edges() {
        let mut g = chain();
        g.edges.push(MetricEdge {
            a: 0,
            b: 1,
            length: 0.5,
        });
        assert_eq!(g.betti1(), 1);
    }
}
