//! Independent reference computations for acceptance testing: the exact
//! shortest obstacle-avoiding path via a visibility graph over obstacle
//! corners, and a dense-sampling collision counter that cross-checks the
//! supercover traversal.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::error::{Error, Result};
use crate::pathplan::{GridMap, Polyline};

/// Length of the shortest polygonal path from start to goal that avoids
/// the open interior of every obstacle cell.
///
/// Shortest paths in a rectangle with rectangular holes turn only at
/// hole corners, so Dijkstra over the visibility graph of obstacle-cell
/// corners (plus start and goal) is exact. Grazing an obstacle boundary
/// is allowed here while the supercover collision count forbids it,
/// which makes this a true lower bound on the length of any feasible
/// polyline on the same map.
pub fn shortest_path_oracle(map: &GridMap) -> Result<f64> {
    if !map.has_free_route() {
        return Err(Error::InfeasibleMap);
    }

    let cell = map.cell_size();
    let mut nodes: Vec<(f64, f64)> = vec![map.start(), map.goal()];
    let mut corner_set: BTreeSet<(u32, u32)> = BTreeSet::new();
    for &(col, row) in map.obstacles() {
        for corner in [
            (col, row),
            (col + 1, row),
            (col, row + 1),
            (col + 1, row + 1),
        ] {
            corner_set.insert(corner);
        }
    }
    nodes.extend(
        corner_set
            .iter()
            .map(|&(c, r)| (c as f64 * cell, r as f64 * cell)),
    );

    let obstacles: Vec<(f64, f64, f64, f64)> = map
        .obstacles()
        .iter()
        .map(|&(c, r)| {
            (
                c as f64 * cell,
                r as f64 * cell,
                (c + 1) as f64 * cell,
                (r + 1) as f64 * cell,
            )
        })
        .collect();

    let visible = |p: (f64, f64), q: (f64, f64)| -> bool {
        !obstacles.iter().any(|&b| segment_enters_interior(p, q, b))
    };

    let n = nodes.len();
    let mut dist = vec![f64::INFINITY; n];
    let mut done = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(DistKey, usize)>> = BinaryHeap::new();
    dist[0] = 0.0;
    heap.push(Reverse((DistKey(0.0), 0)));

    while let Some(Reverse((DistKey(d), u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        if u == 1 {
            return Ok(d);
        }
        for v in 0..n {
            if done[v] || !visible(nodes[u], nodes[v]) {
                continue;
            }
            let step = euclid(nodes[u], nodes[v]);
            let candidate = d + step;
            if candidate < dist[v] {
                dist[v] = candidate;
                heap.push(Reverse((DistKey(candidate), v)));
            }
        }
    }
    Err(Error::InfeasibleMap)
}

/// f64 ordered by total order for use as a heap key; distances here are
/// always finite and non-NaN.
#[derive(PartialEq)]
struct DistKey(f64);

impl Eq for DistKey {}

impl PartialOrd for DistKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DistKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

fn euclid(p: (f64, f64), q: (f64, f64)) -> f64 {
    ((q.0 - p.0).powi(2) + (q.1 - p.1).powi(2)).sqrt()
}

/// Whether the closed segment `p -> q` meets the open interior of the
/// box `(x0, y0, x1, y1)`. Boundary touches do not count.
fn segment_enters_interior(p: (f64, f64), q: (f64, f64), b: (f64, f64, f64, f64)) -> bool {
    let (x0, y0, x1, y1) = b;
    let d = (q.0 - p.0, q.1 - p.1);
    let mut t0 = 0.0_f64;
    let mut t1 = 1.0_f64;
    for (start, delta, lo, hi) in [(p.0, d.0, x0, x1), (p.1, d.1, y0, y1)] {
        if delta == 0.0 {
            if start < lo || start > hi {
                return false;
            }
        } else {
            let ta = (lo - start) / delta;
            let tb = (hi - start) / delta;
            let (near, far) = if ta <= tb { (ta, tb) } else { (tb, ta) };
            t0 = t0.max(near);
            t1 = t1.min(far);
            if t0 > t1 {
                return false;
            }
        }
    }
    // The clipped sub-segment lies in the closed box; it meets the open
    // interior iff its midpoint is strictly inside.
    let tm = 0.5 * (t0 + t1);
    let mx = p.0 + tm * d.0;
    let my = p.1 + tm * d.1;
    mx > x0 && mx < x1 && my > y0 && my < y1
}

/// Reference collision counter: walk each segment in `step`-meter
/// increments and count the distinct obstacle cells the samples land in,
/// per segment. Slow but independent of the supercover traversal.
pub fn count_obstacle_intersections_dense(path: &Polyline, map: &GridMap, step: f64) -> u32 {
    assert!(step > 0.0);
    let mut total = 0;
    for w in path.points.windows(2) {
        let length = euclid(w[0], w[1]);
        let samples = (length / step).ceil() as usize + 1;
        let mut hit: BTreeSet<(u32, u32)> = BTreeSet::new();
        for i in 0..=samples {
            let t = i as f64 / samples as f64;
            let x = w[0].0 + t * (w[1].0 - w[0].0);
            let y = w[0].1 + t * (w[1].1 - w[0].1);
            let col = (x / map.cell_size()).floor() as i64;
            let row = (y / map.cell_size()).floor() as i64;
            if col >= 0
                && row >= 0
                && (col as u64) < map.width() as u64
                && (row as u64) < map.height() as u64
            {
                let cell = (col as u32, row as u32);
                if map.is_obstacle(cell) {
                    hit.insert(cell);
                }
            }
        }
        total += hit.len() as u32;
    }
    total
}
