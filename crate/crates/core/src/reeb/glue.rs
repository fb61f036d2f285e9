use super::cover::IntervalCover;
use super::nerve::ClusterGraph;
use crate::error::{Error, Result};
use crate::graph::{MetricEdge, MetricGraph, MetricNode, UnionFind};

/// Result of gluing interval copies along the nerve: the quotient metric
/// graph plus the bookkeeping needed for vertex assignment and embedding.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub graph: MetricGraph,
    /// Quotient node id for each slot `3 * cluster + {0 lo, 1 mid, 2 hi}`.
    pub slot_node: Vec<usize>,
    /// For each quotient node id, the slots identified into it, each as
    /// `(cluster id, slot)` with slot 0 = lower endpoint, 1 = midpoint,
    /// 2 = upper endpoint.
    pub node_slots: Vec<Vec<(usize, u8)>>,
}

/// Glues the interval copies of the nerve clusters into the quotient metric
/// graph. Each cluster is a copy of its interval split at the midpoint into
/// two half-edges; for every nerve edge the upper half of the lower interval
/// is identified with the lower half of the upper interval. Identifications
/// are tracked with union-find over the three endpoint slots and the two
/// half-edges of every copy; half-edges merged into one identification class
/// become a single edge of the quotient, while unrelated arcs between the
/// same endpoints stay parallel.
///
/// `root_cluster` names the cluster whose lower endpoint carries the root
/// (the height-0 node).
pub fn glue_intervals(
    nerve: &ClusterGraph,
    cover: &IntervalCover,
    root_cluster: usize,
) -> Result<Quotient> {
    let n = nerve.nodes.len();
    let mut slots = UnionFind::new(3 * n);
    let mut halves = UnionFind::new(2 * n);

    for &(a, b) in &nerve.edges {
        let (ia, ib) = (nerve.nodes[a].interval, nerve.nodes[b].interval);
        if ia == ib {
            return Err(Error::EqualIntervals { interval: ia });
        }
        let (lower, upper) = if ia < ib { (a, b) } else { (b, a) };
        debug_assert_eq!(
            nerve.nodes[lower].interval + 1,
            nerve.nodes[upper].interval,
            "nerve edges join clusters on consecutive intervals"
        );
        slots.union(3 * lower + 1, 3 * upper);
        slots.union(3 * lower + 2, 3 * upper + 1);
        halves.union(2 * lower + 1, 2 * upper);
    }

    // One quotient node per slot class, numbered by (height, first slot).
    let height_idx = |slot: usize| nerve.nodes[slot / 3].interval + slot % 3;
    let mut class_first: Vec<(usize, usize)> = Vec::new();
    let mut root_of = vec![usize::MAX; 3 * n];
    for slot in 0..3 * n {
        let root = slots.find(slot);
        if root_of[root] == usize::MAX {
            root_of[root] = class_first.len();
            class_first.push((height_idx(slot), slot));
        } else {
            debug_assert_eq!(class_first[root_of[root]].0, height_idx(slot));
        }
    }
    let mut order: Vec<usize> = (0..class_first.len()).collect();
    order.sort_by_key(|&c| class_first[c]);
    let mut class_node = vec![usize::MAX; class_first.len()];
    let mut nodes = Vec::with_capacity(class_first.len());
    for (id, &class) in order.iter().enumerate() {
        class_node[class] = id;
        nodes.push(MetricNode {
            id,
            height: cover.height(class_first[class].0),
        });
    }

    let mut slot_node = vec![usize::MAX; 3 * n];
    let mut node_slots = vec![Vec::new(); nodes.len()];
    for slot in 0..3 * n {
        let node = class_node[root_of[slots.find(slot)]];
        slot_node[slot] = node;
        node_slots[node].push(((slot / 3), (slot % 3) as u8));
    }

    // One metric edge per half-edge identification class.
    let mut edges = Vec::new();
    let mut seen = vec![false; 2 * n];
    for half in 0..2 * n {
        let root = halves.find(half);
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let cluster = half / 2;
        let lo_slot = 3 * cluster + half % 2;
        let a = slot_node[lo_slot];
        let b = slot_node[lo_slot + 1];
        if a == b {
            // Degenerate identification collapsed the half-edge; drop it.
            continue;
        }
        edges.push(MetricEdge {
            a: a.min(b),
            b: a.max(b),
            length: cover.half(),
        });
    }
    edges.sort_by(|x, y| (x.a, x.b).cmp(&(y.a, y.b)));

    let root_node = slot_node[3 * root_cluster];
    let graph = MetricGraph {
        nodes,
        edges,
        root_node,
    };
    Ok(Quotient {
        graph,
        slot_node,
        node_slots,
    })
}
