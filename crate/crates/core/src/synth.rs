//! Seeded synthetic datasets: noisy samples of simple metric graphs and a
//! simulated highway crossing emitting traces.

use std::f64::consts::PI;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::geometry::{PointCloud, Trace};

/// Points evenly spaced on the unit circle, with optional Gaussian jitter.
pub fn circle(n: usize, noise: f64, seed: u64) -> PointCloud {
    let parts: Vec<(f64, PartFn)> = vec![(
        2.0 * PI,
        Box::new(|t| {
            let a = 2.0 * PI * t;
            [a.cos(), a.sin()]
        }),
    )];
    sample_parts(&parts, n, noise, seed)
}

/// Unit circle plus the vertical diameter: three arcs meeting at the two
/// junctions (0, 1) and (0, -1).
pub fn theta(n: usize, noise: f64, seed: u64) -> PointCloud {
    let parts: Vec<(f64, PartFn)> = vec![
        (
            PI,
            Box::new(|t| {
                let a = -PI / 2.0 + PI * t;
                [a.cos(), a.sin()]
            }),
        ),
        (
            PI,
            Box::new(|t| {
                let a = PI / 2.0 + PI * t;
                [a.cos(), a.sin()]
            }),
        ),
        (2.0, Box::new(|t| [0.0, 1.0 - 2.0 * t])),
    ];
    sample_parts(&parts, n, noise, seed)
}

/// Unit circle with a stick of length 2 attached at (1, 0).
pub fn lollipop(n: usize, noise: f64, seed: u64) -> PointCloud {
    let parts: Vec<(f64, PartFn)> = vec![
        (
            2.0 * PI,
            Box::new(|t| {
                let a = 2.0 * PI * t;
                [a.cos(), a.sin()]
            }),
        ),
        (2.0, Box::new(|t| [1.0 + 2.0 * t, 0.0])),
    ];
    sample_parts(&parts, n, noise, seed)
}

/// Three unit-length arms from the origin at 90, 210 and 330 degrees.
pub fn y_graph(n: usize, noise: f64, seed: u64) -> PointCloud {
    let arm = |angle: f64| -> (f64, PartFn) {
        (
            1.0,
            Box::new(move |t| [t * angle.cos(), t * angle.sin()]),
        )
    };
    let parts = vec![
        arm(PI / 2.0),
        arm(PI / 2.0 + 2.0 * PI / 3.0),
        arm(PI / 2.0 + 4.0 * PI / 3.0),
    ];
    sample_parts(&parts, n, noise, seed)
}

type PartFn = Box<dyn Fn(f64) -> [f64; 2]>;

/// Distributes `n` samples over parts proportionally to length and spaces
/// them evenly along each part.
fn sample_parts(parts: &[(f64, PartFn)], n: usize, noise: f64, seed: u64) -> PointCloud {
    let total: f64 = parts.iter().map(|p| p.0).sum();
    let mut counts: Vec<usize> = parts
        .iter()
        .map(|p| ((n as f64) * p.0 / total).floor() as usize)
        .collect();
    let mut assigned: usize = counts.iter().sum();
    let mut i = 0;
    let part_count = counts.len();
    while assigned < n {
        counts[i % part_count] += 1;
        assigned += 1;
        i += 1;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, noise.max(f64::MIN_POSITIVE)).unwrap();
    let mut out = PointCloud::empty(2);
    for ((_, f), &count) in parts.iter().zip(&counts) {
        for k in 0..count {
            let t = k as f64 / count.max(1) as f64;
            let mut p = f(t);
            if noise > 0.0 {
                p[0] += normal.sample(&mut rng);
                p[1] += normal.sample(&mut rng);
            }
            out.push(&p);
        }
    }
    out
}

/// Highway-crossing geometry: two perpendicular roads with directional lanes
/// offset by `LANE_OFFSET` from the axes (right-driving), plus quarter-turn
/// ramps of radius `RAMP_RADIUS` for the four right turns. Left turns and
/// U-turns are not modelled.
pub const ROAD_HALF_LENGTH: f64 = 6.0;
pub const LANE_OFFSET: f64 = 0.1;
pub const RAMP_RADIUS: f64 = 1.6;

/// Simulates cars driving through the crossing under the right-driving rule.
/// Each trace picks one of the eight routes (four entries, straight or right
/// turn), starts at a random offset along its approach and emits `len`
/// positions at uniform arc steps with Gaussian position noise.
pub fn highway_crossing(traces: usize, len: usize, noise: f64, seed: u64) -> Vec<Trace> {
    let routes = highway_routes();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, noise.max(f64::MIN_POSITIVE)).unwrap();

    let mut out = Vec::with_capacity(traces);
    for _ in 0..traces {
        let route = &routes[rng.random_range(0..routes.len())];
        let total = polyline_length(route);
        let offset = rng.random_range(0.0..2.0_f64.min(total / 4.0));
        let step = (total - offset) / (len - 1) as f64;
        let mut points = PointCloud::empty(2);
        for k in 0..len {
            let mut p = point_at(route, offset + step * k as f64);
            if noise > 0.0 {
                p[0] += normal.sample(&mut rng);
                p[1] += normal.sample(&mut rng);
            }
            points.push(&p);
        }
        out.push(Trace::new(points).expect("len >= 1"));
    }
    out
}

/// The eight routes as polylines (arcs flattened to short segments).
fn highway_routes() -> Vec<Vec<[f64; 2]>> {
    let (l, w, r) = (ROAD_HALF_LENGTH, LANE_OFFSET, RAMP_RADIUS);
    let arc = |center: [f64; 2], from_deg: f64, to_deg: f64| -> Vec<[f64; 2]> {
        let steps = 32;
        (0..=steps)
            .map(|i| {
                let a = (from_deg + (to_deg - from_deg) * i as f64 / steps as f64).to_radians();
                [center[0] + r * a.cos(), center[1] + r * a.sin()]
            })
            .collect()
    };
    let mut routes = Vec::new();

    // Straights: east, west, north, south lanes.
    routes.push(vec![[-l, -w], [l, -w]]);
    routes.push(vec![[l, w], [-l, w]]);
    routes.push(vec![[w, -l], [w, l]]);
    routes.push(vec![[-w, l], [-w, -l]]);

    // Right turns; each arc is tangent to both lanes it joins.
    let mut east_to_south = vec![[-l, -w]];
    east_to_south.extend(arc([-(w + r), -(w + r)], 90.0, 0.0));
    east_to_south.push([-w, -l]);
    routes.push(east_to_south);

    let mut south_to_west = vec![[-w, l]];
    south_to_west.extend(arc([-(w + r), w + r], 0.0, -90.0));
    south_to_west.push([-l, w]);
    routes.push(south_to_west);

    let mut west_to_north = vec![[l, w]];
    west_to_north.extend(arc([w + r, w + r], -90.0, -180.0));
    west_to_north.push([w, l]);
    routes.push(west_to_north);

    let mut north_to_east = vec![[w, -l]];
    north_to_east.extend(arc([w + r, -(w + r)], 180.0, 90.0));
    north_to_east.push([l, -w]);
    routes.push(north_to_east);

    routes
}

fn polyline_length(points: &[[f64; 2]]) -> f64 {
    points
        .windows(2)
        .map(|w| ((w[1][0] - w[0][0]).powi(2) + (w[1][1] - w[0][1]).powi(2)).sqrt())
        .sum()
}

fn point_at(points: &[[f64; 2]], arc: f64) -> [f64; 2] {
    let mut remaining = arc;
    for w in points.windows(2) {
        let seg = ((w[1][0] - w[0][0]).powi(2) + (w[1][1] - w[0][1]).powi(2)).sqrt();
        if remaining <= seg {
            let t = if seg > 0.0 { remaining / seg } else { 0.0 };
            return [
                w[0][0] + (w[1][0] - w[0][0]) * t,
                w[0][1] + (w[1][1] - w[0][1]) * t,
            ];
        }
        remaining -= seg;
    }
    *points.last().expect("nonempty polyline")
}
