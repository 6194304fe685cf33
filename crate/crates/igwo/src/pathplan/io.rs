//! Map file format: a JSON document with fields `width`, `height`,
//! `cell_size_m`, `obstacles` (list of `[col, row]` pairs), `start` and
//! `goal` (`[x, y]` in meters). Unknown fields are rejected.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pathplan::GridMap;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    width: u32,
    height: u32,
    cell_size_m: f64,
    obstacles: Vec<(u32, u32)>,
    start: (f64, f64),
    goal: (f64, f64),
}

/// Parse a map document. Malformed JSON reports line/column context;
/// semantically invalid maps (out-of-range obstacle indices, bad
/// start/goal placement) are rejected as well.
pub fn map_from_json(text: &str) -> Result<GridMap> {
    let file: MapFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("map file: {e}")))?;
    let obstacles: BTreeSet<(u32, u32)> = file.obstacles.iter().copied().collect();
    GridMap::new(
        file.width,
        file.height,
        file.cell_size_m,
        obstacles,
        file.start,
        file.goal,
    )
    .map_err(|e| match e {
        Error::Parse(msg) | Error::Config(msg) => Error::Parse(format!("map file: {msg}")),
        other => other,
    })
}

/// Serialize a map to its canonical JSON form. Obstacles are emitted in
/// sorted order, so equal maps produce byte-identical documents.
pub fn map_to_json(map: &GridMap) -> String {
    let file = MapFile {
        width: map.width(),
        height: map.height(),
        cell_size_m: map.cell_size(),
        obstacles: map.obstacles().iter().copied().collect(),
        start: map.start(),
        goal: map.goal(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("map serialization is infallible");
    text.push('\n');
    text
}

pub fn load_map(path: &Path) -> Result<GridMap> {
    let text = std::fs::read_to_string(path)?;
    map_from_json(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn save_map(map: &GridMap, path: &Path) -> Result<()> {
    std::fs::write(path, map_to_json(map))?;
    Ok(())
}
