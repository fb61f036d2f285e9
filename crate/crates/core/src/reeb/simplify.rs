use std::collections::HashMap;

use crate::graph::{MetricEdge, MetricGraph};

/// Chain-merges every maximal run of degree-2 nodes into a single edge whose
/// length is the run's total length. Kept nodes are those of degree other
/// than 2, local extrema of the height function, and (when `preserve_root`)
/// the root. Pairwise distances between surviving nodes and the first Betti
/// number are unchanged.
pub fn simplify(graph: &MetricGraph, preserve_root: bool) -> MetricGraph {
    simplify_with_map(graph, preserve_root).0
}

/// Like [`simplify`], also returning, for every removed node, the surviving
/// chain endpoint nearest to it along the chain (ties go to the lower, then
/// smaller-id endpoint).
pub fn simplify_with_map(
    graph: &MetricGraph,
    preserve_root: bool,
) -> (MetricGraph, HashMap<usize, usize>) {
    let n = graph.nodes.len();
    let index = graph.index_of_ids();
    let heights: Vec<f64> = graph.nodes.iter().map(|n| n.height).collect();

    // Adjacency with edge indices so chains can consume edges exactly once.
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, edge) in graph.edges.iter().enumerate() {
        let (ia, ib) = (index[&edge.a], index[&edge.b]);
        adj[ia].push((e, ib));
        adj[ib].push((e, ia));
    }

    let keep: Vec<bool> = (0..n)
        .map(|i| {
            if preserve_root && graph.nodes[i].id == graph.root_node {
                return true;
            }
            if adj[i].len() != 2 {
                return true;
            }
            let (a, b) = (adj[i][0].1, adj[i][1].1);
            if a == i || b == i {
                return true; // self-loop, never merged through
            }
            let h = heights[i];
            // Local extrema stay: both neighbors below, or both above.
            (h > heights[a] && h > heights[b]) || (h < heights[a] && h < heights[b])
        })
        .collect();

    let mut consumed = vec![false; graph.edges.len()];
    let mut edges = Vec::new();
    let mut relocation = HashMap::new();

    for start in 0..n {
        if !keep[start] {
            continue;
        }
        for k in 0..adj[start].len() {
            let (first_edge, mut next) = adj[start][k];
            if consumed[first_edge] {
                continue;
            }
            consumed[first_edge] = true;
            let mut total = graph.edges[first_edge].length;
            let mut prev_edge = first_edge;
            let mut interior: Vec<(usize, f64)> = Vec::new();
            while !keep[next] {
                interior.push((next, total));
                let &(e, after) = adj[next]
                    .iter()
                    .find(|&&(e, _)| e != prev_edge)
                    .expect("degree-2 node has a second edge");
                consumed[e] = true;
                total += graph.edges[e].length;
                prev_edge = e;
                next = after;
            }
            let (a, b) = (graph.nodes[start].id, graph.nodes[next].id);
            edges.push(MetricEdge {
                a: a.min(b),
                b: a.max(b),
                length: total,
            });
            for &(node, from_start) in &interior {
                let to_end = total - from_start;
                let endpoint = if from_start < to_end {
                    start
                } else if to_end < from_start {
                    next
                } else {
                    // Equidistant: lower height wins, then smaller id.
                    let (hs, he) = (heights[start], heights[next]);
                    if hs < he || (hs == he && graph.nodes[start].id < graph.nodes[next].id) {
                        start
                    } else {
                        next
                    }
                };
                relocation.insert(graph.nodes[node].id, graph.nodes[endpoint].id);
            }
        }
    }

    // A component made entirely of removable nodes (a bare cycle) cannot be
    // merged into anything; keep it verbatim.
    for (e, edge) in graph.edges.iter().enumerate() {
        if !consumed[e] {
            edges.push(*edge);
        }
    }
    let mut referenced: Vec<bool> = keep.clone();
    for edge in &edges {
        referenced[index[&edge.a]] = true;
        referenced[index[&edge.b]] = true;
    }

    edges.sort_by(|x, y| (x.a, x.b).cmp(&(y.a, y.b)));
    let nodes = graph
        .nodes
        .iter()
        .enumerate()
        .filter(|&(i, _)| referenced[i])
        .map(|(_, n)| *n)
        .collect();

    (
        MetricGraph {
            nodes,
            edges,
            root_node: graph.root_node,
        },
        relocation,
    )
}
