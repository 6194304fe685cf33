#![no_main]
//! Waypoint-decoder fuzzer: arbitrary float payloads decoded into
//! polylines and scored. Inputs are clamped into the map extent first,
//! mirroring how optimizer candidates reach the objective, and the
//! penalized objective must honor its dichotomy exactly.

use igwo::pathplan::{generate_map, GridMap, PathProblem, PenaltyConfig};
use libfuzzer_sys::fuzz_target;
use std::sync::OnceLock;

fn fixture() -> &'static GridMap {
    static MAP: OnceLock<GridMap> = OnceLock::new();
    MAP.get_or_init(|| generate_map(3, 20, 20, 0.3, (0.5, 0.5), (19.5, 19.5)).unwrap())
}

fuzz_target!(|data: &[u8]| {
    if data.len() < 16 {
        return;
    }
    let floats: Vec<f64> = data
        .chunks_exact(8)
        .map(|chunk| f64::from_le_bytes(chunk.try_into().unwrap()))
        .map(|v| {
            if v.is_finite() {
                v.clamp(0.0, 20.0)
            } else {
                0.0
            }
        })
        .collect();
    let interior = floats.len() / 2;
    let waypoints = (interior + 2).min(40);
    let decision = &floats[..2 * (waypoints - 2)];

    let map = fixture();
    let problem = PathProblem::new(map.clone(), waypoints, PenaltyConfig::default()).unwrap();
    let path = problem.decode(decision);
    assert_eq!(path.points.len(), waypoints);
    assert_eq!(path.points[0], map.start());
    assert_eq!(path.points[waypoints - 1], map.goal());

    let evaluation = problem.evaluate(decision);
    assert!(evaluation.length.is_finite() && evaluation.length >= 0.0);
    if evaluation.collisions == 0 {
        assert_eq!(evaluation.objective, evaluation.length);
    } else {
        assert_eq!(evaluation.objective, 10.0 * evaluation.collisions as f64);
    }
});
