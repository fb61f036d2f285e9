//! The reconstruction pipeline: interval cover, Mapper nerve, interval
//! gluing and chain simplification.

pub mod cover;
pub mod embed;
pub mod glue;
pub mod nerve;
pub mod simplify;

pub use cover::{build_cover, IntervalCover};
pub use embed::embed_graph;
pub use glue::{glue_intervals, Quotient};
pub use nerve::{mapper_nerve, ClusterGraph, ClusterNode};
pub use simplify::{simplify, simplify_with_map};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{sssp, MetricGraph, NeighborGraph, ScalarField};

/// Everything the pipeline produces for one connected input graph.
#[derive(Debug, Clone)]
pub struct AlphaReebOutput {
    /// Final graph: chain-simplified unless simplification was disabled.
    pub graph: MetricGraph,
    /// The unsimplified quotient. Node ids are shared with `graph`; the
    /// height of every node equals its graph distance to the root here.
    pub raw: MetricGraph,
    /// For each input vertex, the id of its image node in `raw`: the node of
    /// its lowest containing cluster nearest to the vertex's distance value.
    pub assignment: Vec<usize>,
    pub nerve: ClusterGraph,
    pub cover: IntervalCover,
    pub field: ScalarField,
    /// Slots (cluster, endpoint) identified into each raw node, indexed by
    /// node id; used for embedding.
    pub node_slots: Vec<Vec<(usize, u8)>>,
    /// Raw nodes removed by simplification, mapped to the nearest surviving
    /// chain endpoint.
    pub relocation: HashMap<usize, usize>,
}

/// Options for [`alpha_reeb_with`].
#[derive(Debug, Clone, Copy)]
pub struct AlphaReebOptions {
    pub simplify: bool,
}

impl Default for AlphaReebOptions {
    fn default() -> Self {
        AlphaReebOptions { simplify: true }
    }
}

/// Runs the full pipeline on a connected graph: distance function from the
/// root, interval cover of its range, Mapper nerve, interval gluing and
/// chain simplification.
pub fn alpha_reeb(graph: &NeighborGraph, root: usize, alpha: f64) -> Result<AlphaReebOutput> {
    alpha_reeb_with(graph, root, alpha, AlphaReebOptions::default())
}

pub fn alpha_reeb_with(
    graph: &NeighborGraph,
    root: usize,
    alpha: f64,
    options: AlphaReebOptions,
) -> Result<AlphaReebOutput> {
    if root >= graph.vertex_count() {
        return Err(Error::InvalidParameter {
            name: "root",
            msg: format!(
                "vertex {root} out of range for {} vertices",
                graph.vertex_count()
            ),
        });
    }
    let field = sssp(graph, root);
    if !field.all_reachable() {
        return Err(Error::Disconnected);
    }
    let cover = build_cover(field.max_value(), alpha)?;
    let nerve = mapper_nerve(graph, &field, &cover)?;

    let root_cluster = nerve
        .nodes
        .iter()
        .position(|n| n.interval == 0 && n.members.binary_search(&root).is_ok())
        .expect("root vertex has distance 0, so it lies in the first interval");
    let quotient = glue_intervals(&nerve, &cover, root_cluster)?;

    // Assignment: clusters are sorted by interval, so the first cluster seen
    // per vertex is its lowest one. The image node is the cluster slot
    // nearest to the vertex's distance value (ties go to the lower slot).
    let mut assignment = vec![usize::MAX; graph.vertex_count()];
    for (c, cluster) in nerve.nodes.iter().enumerate() {
        let (lo, _) = cover.bounds(cluster.interval);
        for &v in &cluster.members {
            if assignment[v] != usize::MAX {
                continue;
            }
            let t = (field.value(v).expect("member is reachable") - lo) / cover.half();
            let slot = if t <= 0.5 {
                0
            } else if t <= 1.5 {
                1
            } else {
                2
            };
            assignment[v] = quotient.slot_node[3 * c + slot];
        }
    }

    let (graph_out, relocation) = if options.simplify {
        simplify_with_map(&quotient.graph, true)
    } else {
        (quotient.graph.clone(), HashMap::new())
    };

    Ok(AlphaReebOutput {
        graph: graph_out,
        raw: quotient.graph,
        assignment,
        nerve,
        cover,
        field,
        node_slots: quotient.node_slots,
        relocation,
    })
}
