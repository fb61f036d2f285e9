//! Independent oracles shared by the integration suites. Everything here
//! recomputes results by brute force, on purpose, and must stay independent
//! of the library's own algorithms.

#![allow(dead_code)]

use filigraph::betti::DistanceMatrix;
use filigraph::{MetricGraph, NeighborGraph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// O(V * E) Bellman-Ford shortest paths.
pub fn bellman_ford(vertex_count: usize, edges: &[(usize, usize, f64)], root: usize) -> Vec<Option<f64>> {
    let mut dist: Vec<Option<f64>> = vec![None; vertex_count];
    dist[root] = Some(0.0);
    for _ in 0..vertex_count {
        let mut changed = false;
        for &(u, v, len) in edges {
            if let Some(du) = dist[u] {
                if dist[v].is_none_or(|dv| du + len < dv) {
                    dist[v] = Some(du + len);
                    changed = true;
                }
            }
            if let Some(dv) = dist[v] {
                if dist[u].is_none_or(|du| dv + len < du) {
                    dist[u] = Some(dv + len);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    dist
}

pub fn bellman_ford_neighbor(graph: &NeighborGraph, root: usize) -> Vec<Option<f64>> {
    bellman_ford(graph.vertex_count(), graph.edges(), root)
}

pub fn bellman_ford_metric(graph: &MetricGraph, root_id: usize) -> Vec<Option<f64>> {
    let index = graph.index_of_ids();
    let edges: Vec<(usize, usize, f64)> = graph
        .edges
        .iter()
        .map(|e| (index[&e.a], index[&e.b], e.length))
        .collect();
    bellman_ford(graph.nodes.len(), &edges, index[&root_id])
}

/// Depth-first-search component labels on the subgraph induced by `active`,
/// labelled in order of smallest contained vertex.
pub fn dfs_components(
    vertex_count: usize,
    edges: &[(usize, usize, f64)],
    active: &[bool],
) -> Vec<Option<usize>> {
    let mut adj = vec![Vec::new(); vertex_count];
    for &(u, v, _) in edges {
        if active[u] && active[v] {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut labels = vec![None; vertex_count];
    let mut next = 0;
    for start in 0..vertex_count {
        if !active[start] || labels[start].is_some() {
            continue;
        }
        let mut stack = vec![start];
        labels[start] = Some(next);
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if labels[v].is_none() {
                    labels[v] = Some(next);
                    stack.push(v);
                }
            }
        }
        next += 1;
    }
    labels
}

/// Seeded random connected weighted graph: a random spanning tree plus
/// `extra` further edges, lengths in `(0.2, 3.0)`.
pub fn random_connected_graph(n: usize, extra: usize, seed: u64) -> NeighborGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.push((u, v, rng.random_range(0.2..3.0)));
        seen.insert((u, v));
    }
    let mut attempts = 0;
    let mut added = 0;
    while added < extra && attempts < 50 * extra.max(1) {
        attempts += 1;
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key) {
            edges.push((key.0, key.1, rng.random_range(0.2..3.0)));
            added += 1;
        }
    }
    NeighborGraph::new(n, edges).unwrap()
}

// ---------------------------------------------------------------------------
// GF(2) linear algebra for homology-rank oracles.

/// Rows are bitvectors over u64 words.
#[derive(Clone)]
pub struct BitMatrix {
    pub rows: Vec<Vec<u64>>,
    pub width: usize,
}

impl BitMatrix {
    pub fn new(width: usize) -> Self {
        BitMatrix { rows: Vec::new(), width }
    }

    pub fn push_row(&mut self, bits: &[usize]) {
        let mut row = vec![0u64; self.width.div_ceil(64)];
        for &b in bits {
            row[b / 64] |= 1 << (b % 64);
        }
        self.rows.push(row);
    }

    /// Rank by Gaussian elimination; consumes a copy of the rows.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        let mut pivot_of: Vec<Option<usize>> = vec![None; self.width];
        for r in 0..rows.len() {
            loop {
                let Some(lead) = leading_bit(&rows[r]) else {
                    break;
                };
                match pivot_of[lead] {
                    Some(p) => {
                        let (a, b) = split_two(&mut rows, p, r);
                        xor_into(b, a);
                    }
                    None => {
                        pivot_of[lead] = Some(r);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    for (w, &word) in row.iter().enumerate() {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

fn xor_into(target: &mut [u64], source: &[u64]) {
    for (t, s) in target.iter_mut().zip(source) {
        *t ^= s;
    }
}

fn split_two<'a>(rows: &'a mut [Vec<u64>], a: usize, b: usize) -> (&'a [u64], &'a mut [u64]) {
    assert!(a != b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

/// Simplices of the Rips complex at `scale` over a distance matrix:
/// edge list and triangle list, both sorted.
pub fn rips_simplices(
    metric: &DistanceMatrix,
    scale: f64,
) -> (Vec<(usize, usize)>, Vec<(usize, usize, usize)>) {
    let n = metric.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if metric.get(i, j) <= scale {
                edges.push((i, j));
            }
        }
    }
    let mut triangles = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if metric.get(i, j) > scale {
                continue;
            }
            for k in j + 1..n {
                if metric.get(i, k) <= scale && metric.get(j, k) <= scale {
                    triangles.push((i, j, k));
                }
            }
        }
    }
    (edges, triangles)
}

/// dim H1 of the Rips complex at `scale`, by boundary-matrix ranks:
/// `dim ker d1 - rank d2 = (E - rank d1) - rank d2`.
pub fn h1_rank_at_scale(metric: &DistanceMatrix, scale: f64) -> usize {
    let n = metric.len();
    let (edges, triangles) = rips_simplices(metric, scale);

    let mut d1 = BitMatrix::new(n);
    for &(i, j) in &edges {
        d1.push_row(&[i, j]);
    }
    let edge_index: std::collections::HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let mut d2 = BitMatrix::new(edges.len().max(1));
    for &(i, j, k) in &triangles {
        d2.push_row(&[
            edge_index[&(i, j)],
            edge_index[&(i, k)],
            edge_index[&(j, k)],
        ]);
    }
    (edges.len() - d1.rank()) - d2.rank()
}

/// Rank of the inclusion-induced map `H1(Rips(alpha)) -> H1(Rips(beta))`
/// for `alpha <= beta`, via `dim Z1(K) - dim(Z1(K) meet B1(L))`. The
/// cycle-space basis of the smaller complex is extracted from the kernel of
/// its boundary map with an augmented identity block.
pub fn h1_rank_between_scales(metric: &DistanceMatrix, alpha: f64, beta: f64) -> usize {
    assert!(alpha <= beta);
    let (edges_k, _) = rips_simplices(metric, alpha);
    let (edges_l, triangles_l) = rips_simplices(metric, beta);
    let edge_index_l: std::collections::HashMap<(usize, usize), usize> =
        edges_l.iter().enumerate().map(|(k, &e)| (e, k)).collect();

    // Kernel basis of d1 over the edges of K, expressed in L's edge indexing.
    let z_basis = kernel_basis(metric.len(), &edges_k)
        .into_iter()
        .map(|cycle| {
            cycle
                .into_iter()
                .map(|e| edge_index_l[&edges_k[e]])
                .collect::<Vec<usize>>()
        })
        .collect::<Vec<_>>();

    let mut b = BitMatrix::new(edges_l.len().max(1));
    for &(i, j, k) in &triangles_l {
        b.push_row(&[
            edge_index_l[&(i, j)],
            edge_index_l[&(i, k)],
            edge_index_l[&(j, k)],
        ]);
    }
    let rank_b = b.rank();

    let mut zb = b.clone();
    for cycle in &z_basis {
        zb.push_row(cycle);
    }
    let rank_zb = zb.rank();

    // dim(Z + B) = rank_zb; dim(Z meet B) = dim Z + rank B - rank_zb.
    let dim_z = z_basis.len();
    dim_z - (dim_z + rank_b - rank_zb)
}

/// Basis of the kernel of the vertex-edge boundary map, each element a set
/// of edge indices.
fn kernel_basis(n_vertices: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let m = edges.len();
    // Columns are edges: eliminate on vertex rows while tracking column
    // combinations in an identity block below.
    let width = n_vertices + m;
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(m);
    for (e, &(u, v)) in edges.iter().enumerate() {
        let mut col = vec![0u64; width.div_ceil(64)];
        for b in [u, v, n_vertices + e] {
            col[b / 64] |= 1 << (b % 64);
        }
        cols.push(col);
    }

    let mut pivot_of: Vec<Option<usize>> = vec![None; n_vertices];
    let mut kernel = Vec::new();
    for c in 0..m {
        loop {
            // Leading vertex bit only (ignore the identity block).
            let lead = (0..n_vertices).find(|&v| cols[c][v / 64] & (1 << (v % 64)) != 0);
            let Some(lead) = lead else {
                // Vertex part vanished: the identity block is a cycle.
                let cycle: Vec<usize> = (0..m)
                    .filter(|&e| {
                        let b = n_vertices + e;
                        cols[c][b / 64] & (1 << (b % 64)) != 0
                    })
                    .collect();
                kernel.push(cycle);
                break;
            };
            match pivot_of[lead] {
                Some(p) => {
                    let (a, b) = split_two(&mut cols, p, c);
                    xor_into(b, a);
                }
                None => {
                    pivot_of[lead] = Some(c);
                    break;
                }
            }
        }
    }
    kernel
}

// ---------------------------------------------------------------------------
// Intrinsic sample metrics for the Betti estimator.

/// Points evenly spaced on a circle of the given circumference with the
/// intrinsic arc-length metric.
pub fn circle_metric(n: usize, circumference: f64) -> DistanceMatrix {
    let step = circumference / n as f64;
    DistanceMatrix::from_fn(n, |i, j| {
        let hops = (i as i64 - j as i64).unsigned_abs() as usize;
        let hops = hops.min(n - hops);
        hops as f64 * step
    })
}

/// Two circles of the given circumference wedged at a point, `per_loop`
/// points each plus the junction, intrinsic metric.
pub fn figure_eight_metric(per_loop: usize, circumference: f64) -> DistanceMatrix {
    // Point 0 is the junction; points 1..=per_loop sit on loop A at arc
    // positions k * step; the rest on loop B likewise.
    let step = circumference / (per_loop + 1) as f64;
    let n = 2 * per_loop + 1;
    let arc = |k: usize| -> (usize, f64) {
        // (loop id, arc position from the junction along the loop)
        if k == 0 {
            (0, 0.0)
        } else if k <= per_loop {
            (0, step * k as f64)
        } else {
            (1, step * (k - per_loop) as f64)
        }
    };
    let loop_dist = move |a: f64, b: f64| -> f64 {
        let d = (a - b).abs();
        d.min(circumference - d)
    };
    DistanceMatrix::from_fn(n, move |i, j| {
        let (li, ai) = arc(i);
        let (lj, aj) = arc(j);
        if i == 0 || j == 0 || li == lj {
            if li == lj {
                loop_dist(ai, aj)
            } else {
                // One of them is the junction.
                let a = if i == 0 { aj } else { ai };
                loop_dist(a, 0.0)
            }
        } else {
            loop_dist(ai, 0.0) + loop_dist(aj, 0.0)
        }
    })
}

pub fn segment_metric(n: usize, spacing: f64) -> DistanceMatrix {
    DistanceMatrix::from_fn(n, move |i, j| spacing * (i as f64 - j as f64).abs())
}

// ---------------------------------------------------------------------------
// Exact band-membership oracle for the band-diameter bound.

/// Connected components of the band `{x : lo <= d_r(x) <= hi}` in the
/// geometric realization of a metric graph, where `x` ranges over edge
/// interiors as well as vertices. Band membership per edge is solved in
/// closed form from the piecewise-linear restriction of `d_r`; component
/// diameters are measured over sampled positions (an under-approximation,
/// which is the safe direction for checking an upper bound).
pub fn band_component_diameters(
    graph: &NeighborGraph,
    dist: &[Option<f64>],
    lo: f64,
    hi: f64,
) -> Vec<f64> {
    #[derive(Clone)]
    struct BandPoint {
        edge: usize,
        t: f64, // position along the edge from endpoint u
    }

    // Covered sub-intervals per edge; band points sampled inside them.
    let mut points: Vec<BandPoint> = Vec::new();
    let mut intervals: Vec<(usize, f64, f64)> = Vec::new(); // (edge, t0, t1)
    for (e, &(u, v, len)) in graph.edges().iter().enumerate() {
        let (Some(du), Some(dv)) = (dist[u], dist[v]) else {
            continue;
        };
        // d_r along the edge: min(du + t, dv + len - t), a tent with apex at
        // t0 (possibly outside the edge, making it monotone).
        let apex = (len + dv - du) / 2.0;
        let f = |t: f64| (du + t).min(dv + len - t);
        let mut breaks = vec![0.0, len];
        if apex > 0.0 && apex < len {
            breaks.push(apex);
        }
        // Crossing points of f with the band boundaries on each linear piece.
        let mut candidates = breaks.clone();
        for &(piece_lo, piece_hi) in &[(0.0, apex.clamp(0.0, len)), (apex.clamp(0.0, len), len)] {
            if piece_hi <= piece_lo {
                continue;
            }
            let (fa, fb) = (f(piece_lo), f(piece_hi));
            for bound in [lo, hi] {
                if (fa - bound) * (fb - bound) < 0.0 {
                    let t = piece_lo + (bound - fa) / (fb - fa) * (piece_hi - piece_lo);
                    candidates.push(t);
                }
            }
        }
        candidates.sort_by(|a, b| a.partial_cmp(b).unwrap());
        candidates.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        for w in candidates.windows(2) {
            let mid = (w[0] + w[1]) / 2.0;
            let value = f(mid);
            if lo <= value && value <= hi {
                intervals.push((e, w[0], w[1]));
            }
        }
    }
    for &(e, t0, t1) in &intervals {
        let samples = 8;
        for s in 0..=samples {
            let t = t0 + (t1 - t0) * s as f64 / samples as f64;
            points.push(BandPoint { edge: e, t });
        }
    }

    if points.is_empty() {
        return Vec::new();
    }

    // Union-find over band points: points on the same covered interval are
    // connected; interval endpoints touching a vertex connect through it.
    let n = points.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };

    // Group points per interval (consecutive by construction).
    let mut vertex_rep: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut idx = 0;
    for &(e, t0, t1) in &intervals {
        let first = idx;
        let last = idx + 8;
        for p in first..last {
            union(&mut parent, p, p + 1);
        }
        let (u, v, len) = graph.edges()[e];
        if t0 <= 1e-12 {
            let rep = *vertex_rep.entry(u).or_insert(first);
            union(&mut parent, rep, first);
        }
        if t1 >= len - 1e-12 {
            let rep = *vertex_rep.entry(v).or_insert(last);
            union(&mut parent, rep, last);
        }
        idx = last + 1;
    }

    // Ambient distances between band points via vertex distances.
    let adj = graph.adjacency();
    let n_vertices = graph.vertex_count();
    let all_dists: Vec<Vec<f64>> = (0..n_vertices)
        .map(|s| {
            // Dijkstra over the original graph for ambient distances.
            let mut dist = vec![f64::INFINITY; n_vertices];
            let mut heap = std::collections::BinaryHeap::new();
            dist[s] = 0.0;
            heap.push((std::cmp::Reverse(ordered_float(0.0)), s));
            while let Some((std::cmp::Reverse(d), u)) = heap.pop() {
                let d = d.0;
                if d > dist[u] {
                    continue;
                }
                for &(v, len) in &adj[u] {
                    if d + len < dist[v] {
                        dist[v] = d + len;
                        heap.push((std::cmp::Reverse(ordered_float(dist[v])), v));
                    }
                }
            }
            dist
        })
        .collect();

    let point_dist = |a: &BandPoint, b: &BandPoint| -> f64 {
        let (ua, va, la) = graph.edges()[a.edge];
        let (ub, vb, lb) = graph.edges()[b.edge];
        if a.edge == b.edge {
            let direct = (a.t - b.t).abs();
            let around = (a.t + all_dists[ua][ub] + b.t)
                .min(a.t + all_dists[ua][vb] + (lb - b.t))
                .min((la - a.t) + all_dists[va][ub] + b.t)
                .min((la - a.t) + all_dists[va][vb] + (lb - b.t));
            direct.min(around)
        } else {
            (a.t + all_dists[ua][ub] + b.t)
                .min(a.t + all_dists[ua][vb] + (lb - b.t))
                .min((la - a.t) + all_dists[va][ub] + b.t)
                .min((la - a.t) + all_dists[va][vb] + (lb - b.t))
        }
    };

    // Diameter per component.
    let mut by_component: std::collections::HashMap<usize, Vec<usize>> =
        std::collections::HashMap::new();
    for p in 0..n {
        let root = find(&mut parent, p);
        by_component.entry(root).or_default().push(p);
    }
    let mut diameters = Vec::new();
    for members in by_component.values() {
        let mut best = 0.0_f64;
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                best = best.max(point_dist(&points[a], &points[b]));
            }
        }
        diameters.push(best);
    }
    diameters
}

#[derive(PartialEq, PartialOrd)]
struct OrderedF64(f64);
impl Eq for OrderedF64 {}
impl Ord for OrderedF64 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.partial_cmp(other).unwrap()
    }
}
fn ordered_float(x: f64) -> OrderedF64 {
    OrderedF64(x)
}
