use std::collections::BTreeMap;

use super::nerve::ClusterGraph;
use crate::geometry::PointCloud;
use crate::graph::MetricGraph;

/// Embeds each node of the metric graph at the coordinates of a
/// representative data point: a cluster's lower endpoint goes to its
/// minimum-distance member, the midpoint to the median member and the upper
/// endpoint to the maximum member. Nodes identified from several slots take
/// the representative of the lowest cluster (smallest interval, then cluster
/// id, then slot).
pub fn embed_graph(
    graph: &MetricGraph,
    nerve: &ClusterGraph,
    node_slots: &[Vec<(usize, u8)>],
    cloud: &PointCloud,
) -> BTreeMap<usize, Vec<f64>> {
    let mut out = BTreeMap::new();
    for node in &graph.nodes {
        let slots = &node_slots[node.id];
        let &(cluster, slot) = slots
            .iter()
            .min_by_key(|&&(c, s)| (nerve.nodes[c].interval, c, s))
            .expect("every quotient node has at least one slot");
        let member = match slot {
            0 => nerve.nodes[cluster].min_member.0,
            1 => nerve.nodes[cluster].median_member.0,
            _ => nerve.nodes[cluster].max_member.0,
        };
        out.insert(node.id, cloud.point(member).to_vec());
    }
    out
}
