use std::collections::HashMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{sssp, MetricGraph, NeighborGraph};

/// Distortion statistics of the canonical correspondence between a graph and
/// its reconstruction, plus the wall-clock cost of answering the same
/// distance queries on each side.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistortionReport {
    /// Pairs that entered the statistics (zero-distance pairs are excluded).
    pub pair_count: usize,
    pub mean_relative_distortion: f64,
    pub median_relative_distortion: f64,
    pub max_absolute_gap: f64,
    pub original_seconds: f64,
    pub approx_seconds: f64,
}

/// Compares original pairwise distances `d_H(u, v)` with distances between
/// the images `d_G(pi(u), pi(v))` in the reconstruction. Relative distortion
/// of a pair is `|original - approximate| / original`; pairs at original
/// distance zero are excluded. Use the unsimplified reconstruction for a
/// faithful comparison: its nodes sample every half-interval level.
pub fn distortion_report(
    graph: &NeighborGraph,
    reconstruction: &MetricGraph,
    assignment: &[usize],
    pairs: &[(usize, usize)],
) -> Result<DistortionReport> {
    if pairs.is_empty() {
        return Err(Error::NoPairs("empty pair set"));
    }

    // Original distances, one shortest-path run per distinct source.
    let started = Instant::now();
    let mut original = Vec::with_capacity(pairs.len());
    let mut by_source: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, &(u, _)) in pairs.iter().enumerate() {
        by_source.entry(u).or_default().push(i);
    }
    original.resize(pairs.len(), 0.0);
    let mut sources: Vec<usize> = by_source.keys().copied().collect();
    sources.sort_unstable();
    for &u in &sources {
        let field = sssp(graph, u);
        for &i in &by_source[&u] {
            let v = pairs[i].1;
            original[i] = field.value(v).ok_or(Error::Disconnected)?;
        }
    }
    let original_seconds = started.elapsed().as_secs_f64();

    // Approximate distances through the reconstruction.
    let started = Instant::now();
    let index = reconstruction.index_of_ids();
    let mut approx = vec![0.0; pairs.len()];
    let mut by_node: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, &(u, _)) in pairs.iter().enumerate() {
        by_node.entry(assignment[u]).or_default().push(i);
    }
    let mut nodes: Vec<usize> = by_node.keys().copied().collect();
    nodes.sort_unstable();
    for &node in &nodes {
        let dist = reconstruction
            .distances_from(node)
            .ok_or(Error::NoPairs("assignment names an unknown node"))?;
        for &i in &by_node[&node] {
            let target = assignment[pairs[i].1];
            approx[i] = dist[index[&target]].ok_or(Error::Disconnected)?;
        }
    }
    let approx_seconds = started.elapsed().as_secs_f64();

    let mut relative = Vec::with_capacity(pairs.len());
    let mut max_gap = 0.0_f64;
    for i in 0..pairs.len() {
        let gap = (original[i] - approx[i]).abs();
        max_gap = max_gap.max(gap);
        if original[i] > 0.0 {
            relative.push(gap / original[i]);
        }
    }
    if relative.is_empty() {
        return Err(Error::NoPairs("every sampled pair has distance zero"));
    }
    relative.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mean = relative.iter().sum::<f64>() / relative.len() as f64;
    let median = relative[(relative.len() - 1) / 2];

    Ok(DistortionReport {
        pair_count: relative.len(),
        mean_relative_distortion: mean,
        median_relative_distortion: median,
        max_absolute_gap: max_gap,
        original_seconds,
        approx_seconds,
    })
}
