use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Samples `count` distinct vertex pairs uniformly without replacement from
/// all unordered pairs over `n_vertices`. Deterministic under a fixed seed;
/// asking for more pairs than exist returns them all.
pub fn sample_pairs(n_vertices: usize, count: usize, seed: u64) -> Result<Vec<(usize, usize)>> {
    if n_vertices < 2 {
        return Err(Error::NoPairs("need at least two vertices"));
    }
    if count == 0 {
        return Err(Error::InvalidParameter {
            name: "count",
            msg: "must be at least 1".into(),
        });
    }
    let total = n_vertices * (n_vertices - 1) / 2;
    if count >= total {
        let mut all = Vec::with_capacity(total);
        for u in 0..n_vertices {
            for v in u + 1..n_vertices {
                all.push((u, v));
            }
        }
        return Ok(all);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(count);
    let mut pairs = Vec::with_capacity(count);
    while pairs.len() < count {
        let u = rng.random_range(0..n_vertices);
        let v = rng.random_range(0..n_vertices);
        if u == v {
            continue;
        }
        let pair = (u.min(v), u.max(v));
        if seen.insert(pair) {
            pairs.push(pair);
        }
    }
    Ok(pairs)
}

/// Samples `count` distinct pairs uniformly among pairs of vertices sharing a
/// component label; pairs never straddle components. `labels` is the
/// per-vertex component labelling (inactive vertices are `None`).
pub fn sample_component_pairs(
    labels: &[Option<usize>],
    count: usize,
    seed: u64,
) -> Result<Vec<(usize, usize)>> {
    let members = crate::graph::component_members(labels);
    let totals: Vec<usize> = members.iter().map(|m| m.len() * (m.len() - 1) / 2).collect();
    let total: usize = totals.iter().sum();
    if total == 0 {
        return Err(Error::NoPairs("no component has two vertices"));
    }
    if count >= total {
        let mut all = Vec::new();
        for m in &members {
            for i in 0..m.len() {
                for j in i + 1..m.len() {
                    all.push((m[i], m[j]));
                }
            }
        }
        return Ok(all);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(count);
    let mut pairs = Vec::with_capacity(count);
    while pairs.len() < count {
        // Uniform over same-component pairs: pick a global pair rank, then
        // locate its component.
        let mut rank = rng.random_range(0..total);
        let mut component = 0usize;
        while rank >= totals[component] {
            rank -= totals[component];
            component += 1;
        }
        let m = &members[component];
        let u = m[rng.random_range(0..m.len())];
        let v = m[rng.random_range(0..m.len())];
        if u == v {
            continue;
        }
        let pair = (u.min(v), u.max(v));
        if seen.insert(pair) {
            pairs.push(pair);
        }
    }
    Ok(pairs)
}
