//! Grid-based UAV shortest-path domain: occupancy maps, waypoint
//! decoding, collision counting, the penalized length objective, a
//! seeded feasible-map generator, and a visibility-graph shortest-path
//! oracle used for acceptance testing.

pub mod io;
pub mod oracle;
pub mod supercover;

use std::collections::{BTreeSet, VecDeque};

use crate::core::{ObjectiveSpec, RngStream};
use crate::error::{Error, Result};

/// Occupancy grid with metric start and goal positions.
///
/// Cell `(col, row)` spans `[col, col+1] x [row, row+1]` in units of
/// `cell_size` meters. Start sits in the lower-left quadrant and goal in
/// the upper-right, both inside free cells.
#[derive(Debug, Clone, PartialEq)]
pub struct GridMap {
    width: u32,
    height: u32,
    cell_size: f64,
    obstacles: BTreeSet<(u32, u32)>,
    start: (f64, f64),
    goal: (f64, f64),
}

/// Grids larger than this are rejected; map files are untrusted input
/// and route checks allocate one flag per cell.
pub const MAX_GRID_DIM: u32 = 4096;

impl GridMap {
    pub fn new(
        width: u32,
        height: u32,
        cell_size: f64,
        obstacles: BTreeSet<(u32, u32)>,
        start: (f64, f64),
        goal: (f64, f64),
    ) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::Config("grid dimensions must be positive".into()));
        }
        if width > MAX_GRID_DIM || height > MAX_GRID_DIM {
            return Err(Error::Config(format!(
                "grid dimensions {width}x{height} exceed the {MAX_GRID_DIM} cell limit"
            )));
        }
        if !(cell_size.is_finite() && cell_size > 0.0) {
            return Err(Error::Config(format!(
                "cell size must be positive, got {cell_size}"
            )));
        }
        for &(col, row) in &obstacles {
            if col >= width || row >= height {
                return Err(Error::Parse(format!(
                    "obstacle [{col}, {row}] outside {width}x{height} grid"
                )));
            }
        }
        let map = GridMap {
            width,
            height,
            cell_size,
            obstacles,
            start,
            goal,
        };
        let (w_m, h_m) = map.extent();
        for (label, (x, y)) in [("start", start), ("goal", goal)] {
            if !(x.is_finite()
                && y.is_finite()
                && (0.0..w_m).contains(&x)
                && (0.0..h_m).contains(&y))
            {
                return Err(Error::Config(format!(
                    "{label} ({x}, {y}) lies outside the {w_m}x{h_m} m extent"
                )));
            }
        }
        if map.is_obstacle(map.cell_of(start)) || map.is_obstacle(map.cell_of(goal)) {
            return Err(Error::Config(
                "start and goal must lie in free cells".into(),
            ));
        }
        if !(start.0 < w_m / 2.0 && start.1 < h_m / 2.0) {
            return Err(Error::Config(format!(
                "start ({}, {}) must lie in the lower-left quadrant",
                start.0, start.1
            )));
        }
        if !(goal.0 > w_m / 2.0 && goal.1 > h_m / 2.0) {
            return Err(Error::Config(format!(
                "goal ({}, {}) must lie in the upper-right quadrant",
                goal.0, goal.1
            )));
        }
        Ok(map)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn cell_size(&self) -> f64 {
        self.cell_size
    }

    pub fn obstacles(&self) -> &BTreeSet<(u32, u32)> {
        &self.obstacles
    }

    pub fn start(&self) -> (f64, f64) {
        self.start
    }

    pub fn goal(&self) -> (f64, f64) {
        self.goal
    }

    /// Metric extent `(width, height)` in meters.
    pub fn extent(&self) -> (f64, f64) {
        (
            self.width as f64 * self.cell_size,
            self.height as f64 * self.cell_size,
        )
    }

    pub fn is_obstacle(&self, cell: (u32, u32)) -> bool {
        self.obstacles.contains(&cell)
    }

    /// Cell containing a metric point (interior convention: gridline
    /// points belong to the upper cell).
    pub fn cell_of(&self, point: (f64, f64)) -> (u32, u32) {
        let col = ((point.0 / self.cell_size).floor() as i64).clamp(0, self.width as i64 - 1);
        let row = ((point.1 / self.cell_size).floor() as i64).clamp(0, self.height as i64 - 1);
        (col as u32, row as u32)
    }

    /// Whether a 4-connected route through free cells joins the start
    /// and goal cells.
    pub fn has_free_route(&self) -> bool {
        let start = self.cell_of(self.start);
        let goal = self.cell_of(self.goal);
        let mut seen = vec![false; (self.width * self.height) as usize];
        let idx = |c: (u32, u32)| (c.1 * self.width + c.0) as usize;
        let mut queue = VecDeque::from([start]);
        seen[idx(start)] = true;
        while let Some((col, row)) = queue.pop_front() {
            if (col, row) == goal {
                return true;
            }
            let mut push = |c: i64, r: i64| {
                if (0..self.width as i64).contains(&c) && (0..self.height as i64).contains(&r) {
                    let cell = (c as u32, r as u32);
                    if !seen[idx(cell)] && !self.is_obstacle(cell) {
                        seen[idx(cell)] = true;
                        queue.push_back(cell);
                    }
                }
            };
            push(col as i64 - 1, row as i64);
            push(col as i64 + 1, row as i64);
            push(col as i64, row as i64 - 1);
            push(col as i64, row as i64 + 1);
        }
        false
    }
}

/// Waypoint sequence in meters, including both endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub points: Vec<(f64, f64)>,
}

/// Decision-vector layout for a path of `waypoints` points: the two
/// endpoints are pinned to the map's start and goal, and only the
/// interior points are optimized, two coordinates each.
#[derive(Debug, Clone, Copy)]
pub struct PathEncoding {
    pub waypoints: usize,
}

impl PathEncoding {
    pub fn new(waypoints: usize) -> Result<Self> {
        if waypoints < 3 {
            return Err(Error::Config(format!(
                "a path needs at least 3 waypoints to have an interior, got {waypoints}"
            )));
        }
        Ok(PathEncoding { waypoints })
    }

    /// Dimension of the decision vector: `2 (m - 2)`.
    pub fn dimension(&self) -> usize {
        2 * (self.waypoints - 2)
    }
}

/// Decode an agent's decision vector into a polyline:
/// `[start, interior pairs..., goal]`.
pub fn decode(decision: &[f64], map: &GridMap, waypoints: usize) -> Polyline {
    assert_eq!(
        decision.len(),
        2 * (waypoints - 2),
        "decision vector length {} does not encode {} interior waypoints",
        decision.len(),
        waypoints - 2
    );
    let mut points = Vec::with_capacity(waypoints);
    points.push(map.start());
    for pair in decision.chunks_exact(2) {
        points.push((pair[0], pair[1]));
    }
    points.push(map.goal());
    Polyline { points }
}

/// Total Euclidean length of the polyline in meters.
pub fn path_length(path: &Polyline) -> f64 {
    path.points
        .windows(2)
        .map(|w| {
            let (x0, y0) = w[0];
            let (x1, y1) = w[1];
            ((x1 - x0).powi(2) + (y1 - y0).powi(2)).sqrt()
        })
        .sum()
}

/// Number of segment/obstacle-cell intersections under the supercover
/// convention: per segment, every distinct obstacle cell the segment
/// geometrically touches counts once; a cell crossed by two segments
/// counts once per segment.
pub fn count_obstacle_intersections(path: &Polyline, map: &GridMap) -> u32 {
    let scale = 1.0 / map.cell_size();
    let mut total = 0;
    for w in path.points.windows(2) {
        let p0 = (w[0].0 * scale, w[0].1 * scale);
        let p1 = (w[1].0 * scale, w[1].1 * scale);
        for (col, row) in supercover::segment_cells(p0, p1) {
            if col >= 0
                && row >= 0
                && (col as u64) < map.width() as u64
                && (row as u64) < map.height() as u64
                && map.is_obstacle((col as u32, row as u32))
            {
                total += 1;
            }
        }
    }
    total
}

/// Penalty settings of the path objective.
#[derive(Debug, Clone, Copy)]
pub struct PenaltyConfig {
    /// Penalty coefficient `P`.
    pub coefficient: f64,
    /// When false (the default), a colliding path scores the pure
    /// penalty `P * nO` and the distance term is dropped. When true the
    /// objective becomes `length + P * nO` instead; this study mode
    /// keeps length pressure on infeasible paths.
    pub additive: bool,
}

impl Default for PenaltyConfig {
    fn default() -> Self {
        PenaltyConfig {
            coefficient: 10.0,
            additive: false,
        }
    }
}

impl PenaltyConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.coefficient.is_finite() && self.coefficient > 0.0) {
            return Err(Error::Config(format!(
                "penalty coefficient must be positive, got {}",
                self.coefficient
            )));
        }
        Ok(())
    }
}

/// Length, collision count, and objective value of one decision vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathEvaluation {
    pub length: f64,
    pub collisions: u32,
    pub objective: f64,
}

/// A map plus encoding and penalty settings, packaged as an objective.
#[derive(Debug, Clone)]
pub struct PathProblem {
    map: GridMap,
    encoding: PathEncoding,
    penalty: PenaltyConfig,
}

impl PathProblem {
    pub fn new(map: GridMap, waypoints: usize, penalty: PenaltyConfig) -> Result<Self> {
        penalty.validate()?;
        Ok(PathProblem {
            map,
            encoding: PathEncoding::new(waypoints)?,
            penalty,
        })
    }

    pub fn map(&self) -> &GridMap {
        &self.map
    }

    pub fn waypoints(&self) -> usize {
        self.encoding.waypoints
    }

    pub fn decode(&self, decision: &[f64]) -> Polyline {
        decode(decision, &self.map, self.encoding.waypoints)
    }

    pub fn evaluate(&self, decision: &[f64]) -> PathEvaluation {
        let path = self.decode(decision);
        let length = path_length(&path);
        let collisions = count_obstacle_intersections(&path, &self.map);
        let objective = if collisions == 0 {
            length
        } else if self.penalty.additive {
            length + self.penalty.coefficient * collisions as f64
        } else {
            self.penalty.coefficient * collisions as f64
        };
        PathEvaluation {
            length,
            collisions,
            objective,
        }
    }

    /// Objective over the interior-waypoint decision space; each
    /// coordinate is bounded by the map extent.
    pub fn objective_spec(&self) -> ObjectiveSpec {
        self.objective_spec_with(|_, _| {})
    }

    /// Same objective, with an observer invoked on every evaluation.
    /// The experiment harness uses this to track the best feasible path
    /// seen anywhere in a run, including candidates an algorithm
    /// rejects.
    pub fn objective_spec_with(
        &self,
        observer: impl Fn(&[f64], &PathEvaluation) + Send + Sync + 'static,
    ) -> ObjectiveSpec {
        let problem = self.clone();
        let (w_m, h_m) = self.map.extent();
        let dim = self.encoding.dimension();
        let mut lower = Vec::with_capacity(dim);
        let mut upper = Vec::with_capacity(dim);
        for _ in 0..dim / 2 {
            lower.extend([0.0, 0.0]);
            upper.extend([w_m, h_m]);
        }
        ObjectiveSpec::new(lower, upper, move |x| {
            let evaluation = problem.evaluate(x);
            observer(x, &evaluation);
            evaluation.objective
        })
        .expect("map extent yields valid bounds")
    }
}

/// Objective value of one decision vector per the penalized formulation.
pub fn path_objective(
    decision: &[f64],
    map: &GridMap,
    waypoints: usize,
    penalty: &PenaltyConfig,
) -> f64 {
    let problem = PathProblem::new(map.clone(), waypoints, *penalty)
        .expect("caller provides validated settings");
    problem.evaluate(decision).objective
}

const GENERATION_ATTEMPTS: u32 = 1000;

/// Generate a random map: each non-start/non-goal cell becomes an
/// obstacle independently with probability `density`, re-drawing (up to
/// a bounded number of attempts, all from the same seeded stream) until
/// a 4-connected free route joins start and goal.
///
/// Cells are drawn in row-major order, so a seed fully determines the
/// map.
pub fn generate_map(
    seed: u64,
    width: u32,
    height: u32,
    density: f64,
    start: (f64, f64),
    goal: (f64, f64),
) -> Result<GridMap> {
    if !(0.0..1.0).contains(&density) {
        return Err(Error::Config(format!(
            "obstacle density must lie in [0, 1), got {density}"
        )));
    }
    let mut rng = RngStream::new(seed);
    // Validate start/goal placement once on an empty map.
    let empty = GridMap::new(width, height, 1.0, BTreeSet::new(), start, goal)?;
    let start_cell = empty.cell_of(start);
    let goal_cell = empty.cell_of(goal);

    for _ in 0..GENERATION_ATTEMPTS {
        let mut obstacles = BTreeSet::new();
        for row in 0..height {
            for col in 0..width {
                let draw = rng.next_f64();
                if (col, row) == start_cell || (col, row) == goal_cell {
                    continue;
                }
                if draw < density {
                    obstacles.insert((col, row));
                }
            }
        }
        let map = GridMap::new(width, height, 1.0, obstacles, start, goal)?;
        if map.has_free_route() {
            return Ok(map);
        }
    }
    Err(Error::MapGeneration {
        attempts: GENERATION_ATTEMPTS,
    })
}

pub use oracle::{count_obstacle_intersections_dense, shortest_path_oracle};
