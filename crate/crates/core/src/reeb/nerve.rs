use super::cover::IntervalCover;
use crate::error::{Error, Result};
use crate::graph::{NeighborGraph, ScalarField, UnionFind};

/// One connected component of the subgraph restricted to an interval of the
/// cover, together with its extreme and median members by distance value.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterNode {
    pub interval: usize,
    /// Component label within the interval, in order of smallest member id.
    pub label: usize,
    /// Member vertex ids, ascending.
    pub members: Vec<usize>,
    pub min_member: (usize, f64),
    pub median_member: (usize, f64),
    pub max_member: (usize, f64),
}

/// The 1-skeleton of the nerve of the cluster cover: one node per cluster,
/// an edge wherever clusters on consecutive intervals share a vertex.
///
/// Clusters on intervals two apart can intersect only in vertices sitting
/// exactly on a shared interval endpoint; those intersections are subsumed by
/// the two adjacent-interval edges through the middle interval and are not
/// emitted, matching the overlap structure of the open-interval family.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterGraph {
    pub nodes: Vec<ClusterNode>,
    pub edges: Vec<(usize, usize)>,
}

impl ClusterGraph {
    pub fn betti1(&self) -> usize {
        let mut uf = UnionFind::new(self.nodes.len());
        let mut merges = 0;
        for &(a, b) in &self.edges {
            if uf.union(a, b) {
                merges += 1;
            }
        }
        let components = self.nodes.len() - merges;
        self.edges.len() + components - self.nodes.len()
    }
}

/// Builds the Mapper nerve of the cover: per interval, the connected
/// components of the restricted subgraph; edges between clusters on
/// consecutive intervals with intersecting member sets.
pub fn mapper_nerve(
    graph: &NeighborGraph,
    field: &ScalarField,
    cover: &IntervalCover,
) -> Result<ClusterGraph> {
    let n = graph.vertex_count();

    // Interval membership per vertex (finite values only).
    let mut interval_members: Vec<Vec<usize>> = vec![Vec::new(); cover.len()];
    for v in 0..n {
        let Some(value) = field.value(v) else {
            continue;
        };
        let Some((start, end)) = cover.member_span(value) else {
            return Err(Error::CoverGap { vertex: v, value });
        };
        for j in start..=end {
            interval_members[j].push(v);
        }
    }

    // Edges restricted to each interval: both endpoints must lie in it.
    let mut interval_edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); cover.len()];
    for &(u, v, _) in graph.edges() {
        let (Some(du), Some(dv)) = (field.value(u), field.value(v)) else {
            continue;
        };
        let (Some(su), Some(sv)) = (cover.member_span(du), cover.member_span(dv)) else {
            continue;
        };
        let start = su.0.max(sv.0);
        let end = su.1.min(sv.1);
        if start <= end {
            for j in start..=end {
                interval_edges[j].push((u, v));
            }
        }
    }

    let mut nodes: Vec<ClusterNode> = Vec::new();
    let mut edges = std::collections::BTreeSet::new();

    // Scratch maps from vertex id to cluster node id, stamped per interval so
    // they need no clearing.
    let mut cluster_at = vec![usize::MAX; n];
    let mut stamp = vec![usize::MAX; n];
    let mut prev_cluster_at = vec![usize::MAX; n];
    let mut prev_stamp = vec![usize::MAX; n];

    let mut local = vec![usize::MAX; n];
    for j in 0..cover.len() {
        let members = &interval_members[j];
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
        let mut uf = UnionFind::new(members.len());
        for &(u, v) in &interval_edges[j] {
            uf.union(local[u], local[v]);
        }

        // Components labelled in order of smallest contained vertex id;
        // members are ascending, so first appearance order works.
        let mut component_node = vec![usize::MAX; members.len()];
        for (i, &v) in members.iter().enumerate() {
            let root = uf.find(i);
            if component_node[root] == usize::MAX {
                component_node[root] = nodes.len();
                nodes.push(ClusterNode {
                    interval: j,
                    label: 0,
                    members: Vec::new(),
                    min_member: (v, 0.0),
                    median_member: (v, 0.0),
                    max_member: (v, 0.0),
                });
            }
            let id = component_node[root];
            nodes[id].members.push(v);
            cluster_at[v] = id;
            stamp[v] = j;
            if j > 0 && prev_stamp[v] == j - 1 {
                edges.insert((prev_cluster_at[v], id));
            }
        }
        for &v in members {
            local[v] = usize::MAX;
        }
        std::mem::swap(&mut cluster_at, &mut prev_cluster_at);
        std::mem::swap(&mut stamp, &mut prev_stamp);
    }

    // Labels within each interval and member statistics.
    let mut next_label = 0usize;
    let mut current_interval = usize::MAX;
    for node in &mut nodes {
        if node.interval != current_interval {
            current_interval = node.interval;
            next_label = 0;
        }
        node.label = next_label;
        next_label += 1;

        let mut by_value: Vec<(usize, f64)> = node
            .members
            .iter()
            .map(|&v| (v, field.value(v).expect("member has a finite value")))
            .collect();
        by_value.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap().then(a.0.cmp(&b.0)));
        node.min_member = by_value[0];
        node.median_member = by_value[(by_value.len() - 1) / 2];
        node.max_member = by_value[by_value.len() - 1];

        let (lo, hi) = cover.bounds(node.interval);
        debug_assert!(node.min_member.1 >= lo && node.max_member.1 <= hi);
    }

    Ok(ClusterGraph {
        nodes,
        edges: edges.into_iter().collect(),
    })
}
