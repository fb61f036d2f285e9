use super::{NeighborGraph, UnionFind};

/// Connected-component labels for the subgraph induced by `active`
/// (all vertices when `None`). Labels are `0..c` assigned in order of the
/// smallest vertex id contained in each component; inactive vertices get
/// `None`.
pub fn connected_components(
    graph: &NeighborGraph,
    active: Option<&[usize]>,
) -> Vec<Option<usize>> {
    let n = graph.vertex_count();
    let mut is_active = vec![active.is_none(); n];
    if let Some(subset) = active {
        for &v in subset {
            is_active[v] = true;
        }
    }

    let mut uf = UnionFind::new(n);
    for &(u, v, _) in graph.edges() {
        if is_active[u] && is_active[v] {
            uf.union(u, v);
        }
    }

    let mut labels = vec![None; n];
    let mut next = 0usize;
    let mut root_label = vec![usize::MAX; n];
    for v in 0..n {
        if !is_active[v] {
            continue;
        }
        let r = uf.find(v);
        if root_label[r] == usize::MAX {
            root_label[r] = next;
            next += 1;
        }
        labels[v] = Some(root_label[r]);
    }
    labels
}

/// Vertex lists of the active components, indexed by label. Each list is
/// sorted ascending.
pub fn component_members(labels: &[Option<usize>]) -> Vec<Vec<usize>> {
    let count = labels.iter().flatten().max().map_or(0, |&m| m + 1);
    let mut members = vec![Vec::new(); count];
    for (v, l) in labels.iter().enumerate() {
        if let Some(l) = l {
            members[*l].push(v);
        }
    }
    members
}
