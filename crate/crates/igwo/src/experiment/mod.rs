//! Experiment harness: seeded multi-run studies over the benchmark
//! suite and the path-planning maps, with CSV/text reporting and
//! plot-ready data files.
//!
//! Every output is a pure function of the configuration: per-run seeds
//! are `base_seed + run_index`, generated maps derive from `map_seed`,
//! and all emitted files use deterministic orderings.

pub mod report;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::baselines::{Gwo, Pso, PsoParams, Woa, WoaParams};
use crate::bench::{self, BenchmarkId, BenchmarkSpec};
use crate::core::{run, RngStream, RunConfig, RunResult, SwarmOptimizer};
use crate::error::{Error, Result};
use crate::igwo::{Igwo, LoblConfig};
use crate::pathplan::{
    generate_map, io as map_io, shortest_path_oracle, GridMap, PathProblem, PenaltyConfig,
};
pub use report::{emit_report, parse_report_csv, ReportFormat, StatRow};

/// Tag for the sub-stream feeding F7's evaluation noise, derived from
/// each run seed so the noise never aliases the optimizer's own draws.
pub const F7_NOISE_TAG: u64 = 0xF7;

/// Best feasible (length, decision vector) observed so far in a run.
type FeasibleBest = Mutex<Option<(f64, Vec<f64>)>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgorithmKind {
    Igwo,
    Gwo,
    Pso,
    Woa,
}

pub const ALL_ALGORITHMS: [AlgorithmKind; 4] = [
    AlgorithmKind::Igwo,
    AlgorithmKind::Gwo,
    AlgorithmKind::Pso,
    AlgorithmKind::Woa,
];

impl std::fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            AlgorithmKind::Igwo => "igwo",
            AlgorithmKind::Gwo => "gwo",
            AlgorithmKind::Pso => "pso",
            AlgorithmKind::Woa => "woa",
        };
        write!(f, "{name}")
    }
}

impl FromStr for AlgorithmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "igwo" => Ok(AlgorithmKind::Igwo),
            "gwo" => Ok(AlgorithmKind::Gwo),
            "pso" => Ok(AlgorithmKind::Pso),
            "woa" => Ok(AlgorithmKind::Woa),
            other => Err(Error::Config(format!("unknown algorithm: {other}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Bench,
    Path,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct IgwoSettings {
    pub lobl_k: f64,
    pub use_acp: bool,
    pub use_lobl: bool,
}

impl Default for IgwoSettings {
    fn default() -> Self {
        IgwoSettings {
            lobl_k: 1.0e4,
            use_acp: true,
            use_lobl: true,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PsoSettings {
    pub inertia_start: f64,
    pub inertia_end: f64,
    pub c1: f64,
    pub c2: f64,
    pub v_max_fraction: f64,
}

impl Default for PsoSettings {
    fn default() -> Self {
        let p = PsoParams::default();
        PsoSettings {
            inertia_start: p.inertia_start,
            inertia_end: p.inertia_end,
            c1: p.c1,
            c2: p.c2,
            v_max_fraction: p.v_max_fraction,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WoaSettings {
    pub spiral_b: f64,
    pub spiral_probability: f64,
}

impl Default for WoaSettings {
    fn default() -> Self {
        let p = WoaParams::default();
        WoaSettings {
            spiral_b: p.spiral_b,
            spiral_probability: p.spiral_probability,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PathSettings {
    /// Waypoints per path, endpoints included.
    pub waypoints: usize,
    /// Penalty coefficient P.
    pub penalty: f64,
    /// Study mode: score colliding paths as `length + P * nO` instead of
    /// the pure `P * nO`.
    pub additive_penalty: bool,
    /// Grid size of generated maps.
    pub width: u32,
    pub height: u32,
    pub start: (f64, f64),
    pub goal: (f64, f64),
}

impl Default for PathSettings {
    fn default() -> Self {
        PathSettings {
            waypoints: 20,
            penalty: 10.0,
            additive_penalty: false,
            width: 20,
            height: 20,
            start: (0.5, 0.5),
            goal: (19.5, 19.5),
        }
    }
}

/// Full experiment description; the file format is TOML with exactly
/// these fields, all optional.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub algorithms: Vec<AlgorithmKind>,
    pub runs: u32,
    pub population: usize,
    pub iterations: usize,
    pub base_seed: u64,
    /// Benchmark filter, e.g. ["F1", "F9"]; empty means the full suite.
    pub functions: Vec<String>,
    /// Map files for path mode; when empty, `gen_maps` maps are
    /// generated instead.
    pub maps: Vec<PathBuf>,
    pub gen_maps: u32,
    pub density: f64,
    pub map_seed: u64,
    pub out_dir: PathBuf,
    pub igwo: IgwoSettings,
    pub pso: PsoSettings,
    pub woa: WoaSettings,
    pub path: PathSettings,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            mode: Mode::Bench,
            algorithms: ALL_ALGORITHMS.to_vec(),
            runs: 30,
            population: 40,
            iterations: 200,
            base_seed: 42,
            functions: Vec::new(),
            maps: Vec::new(),
            gen_maps: 4,
            density: 0.25,
            map_seed: 900,
            out_dir: PathBuf::from("out"),
            igwo: IgwoSettings::default(),
            pso: PsoSettings::default(),
            woa: WoaSettings::default(),
            path: PathSettings::default(),
        }
    }
}

pub fn parse_config_str(text: &str) -> Result<ExperimentConfig> {
    toml::from_str(text).map_err(|e| Error::Parse(format!("experiment config: {e}")))
}

pub fn load_config(path: &Path) -> Result<ExperimentConfig> {
    let text = std::fs::read_to_string(path)?;
    parse_config_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

impl ExperimentConfig {
    /// Per-run seed, documented as `base_seed + run_index` so any single
    /// run can be re-executed in isolation.
    pub fn run_seed(&self, run_index: u32) -> u64 {
        self.base_seed.wrapping_add(run_index as u64)
    }

    fn validate_common(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("at least one algorithm is required".into()));
        }
        LoblConfig::new(self.igwo.lobl_k)?;
        self.pso_params().validate()?;
        self.woa_params().validate()?;
        Ok(())
    }

    fn pso_params(&self) -> PsoParams {
        PsoParams {
            inertia_start: self.pso.inertia_start,
            inertia_end: self.pso.inertia_end,
            c1: self.pso.c1,
            c2: self.pso.c2,
            v_max_fraction: self.pso.v_max_fraction,
        }
    }

    fn woa_params(&self) -> WoaParams {
        WoaParams {
            spiral_b: self.woa.spiral_b,
            spiral_probability: self.woa.spiral_probability,
        }
    }

    /// Fresh optimizer state for one run.
    pub fn optimizer(&self, kind: AlgorithmKind) -> Box<dyn SwarmOptimizer> {
        match kind {
            AlgorithmKind::Igwo => {
                let mut igwo =
                    Igwo::new(LoblConfig::new(self.igwo.lobl_k).expect("validated earlier"));
                igwo.use_acp = self.igwo.use_acp;
                igwo.use_lobl = self.igwo.use_lobl;
                Box::new(igwo)
            }
            AlgorithmKind::Gwo => Box::new(Gwo),
            AlgorithmKind::Pso => Box::new(Pso::new(self.pso_params())),
            AlgorithmKind::Woa => Box::new(Woa::new(self.woa_params())),
        }
    }

    /// Benchmark selection with unknown names rejected up front.
    pub fn selected_functions(&self) -> Result<Vec<BenchmarkId>> {
        if self.functions.is_empty() {
            return Ok(bench::ALL.to_vec());
        }
        let mut ids = Vec::new();
        for name in &self.functions {
            let id: BenchmarkId = name.parse()?;
            if !ids.contains(&id) {
                ids.push(id);
            }
        }
        ids.sort();
        Ok(ids)
    }
}

/// One (algorithm, problem) aggregate plus the per-run evaluation count.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub row: StatRow,
    pub evaluations_per_run: u64,
}

#[derive(Debug, Clone)]
pub struct BenchOutcome {
    pub records: Vec<BenchRecord>,
}

impl BenchOutcome {
    pub fn rows(&self) -> Vec<StatRow> {
        self.records.iter().map(|r| r.row.clone()).collect()
    }

    pub fn row(&self, algorithm: AlgorithmKind, problem: BenchmarkId) -> Option<&StatRow> {
        let (a, p) = (algorithm.to_string(), problem.to_string());
        self.records
            .iter()
            .map(|r| &r.row)
            .find(|r| r.algorithm == a && r.problem == p)
    }
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(path, text)?;
    Ok(())
}

fn curve_csv(curve: &[f64]) -> String {
    let mut out = String::from("iteration,best_so_far\n");
    for (i, v) in curve.iter().enumerate() {
        out.push_str(&format!("{i},{v:e}\n"));
    }
    out
}

fn mean_curve(curves: &[Vec<f64>]) -> Vec<f64> {
    let len = curves[0].len();
    let mut mean = vec![0.0; len];
    for curve in curves {
        for (m, &v) in mean.iter_mut().zip(curve) {
            *m += v;
        }
    }
    for m in &mut mean {
        *m /= curves.len() as f64;
    }
    mean
}

fn catalog_csv() -> String {
    let mut out = String::from("id,name,dimension,lower,upper,known_optimum\n");
    for spec in bench::suite() {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            spec.id,
            spec.id.name(),
            spec.dimension,
            spec.lower,
            spec.upper,
            spec.known_optimum
        ));
    }
    out
}

/// Run the benchmark study: `runs` seeded runs per (algorithm, function),
/// aggregated into stat rows, with per-cell mean convergence curves and
/// the function catalog written alongside.
pub fn run_bench_experiment(config: &ExperimentConfig) -> Result<BenchOutcome> {
    config.validate_common()?;
    let functions = config.selected_functions()?;

    let mut records = Vec::new();
    let mut curve_files: BTreeMap<String, String> = BTreeMap::new();

    for &id in &functions {
        let spec = BenchmarkSpec::new(id, 30);
        for &kind in &config.algorithms {
            let mut finals = Vec::with_capacity(config.runs as usize);
            let mut curves = Vec::with_capacity(config.runs as usize);
            let mut evaluations = 0;
            for run_index in 0..config.runs {
                let seed = config.run_seed(run_index);
                let objective = spec.objective(RngStream::derive(seed, F7_NOISE_TAG).next_u64());
                let run_config = RunConfig {
                    population: config.population,
                    iterations: config.iterations,
                    seed,
                };
                let mut optimizer = config.optimizer(kind);
                let result = run(optimizer.as_mut(), &objective, &run_config)?;
                finals.push(result.best_fitness);
                evaluations = result.evaluations;
                curves.push(result.curve);
            }
            records.push(BenchRecord {
                row: StatRow::from_samples(&kind.to_string(), &id.to_string(), &finals),
                evaluations_per_run: evaluations,
            });
            curve_files.insert(
                format!("curves/bench_{id}_{kind}.csv"),
                curve_csv(&mean_curve(&curves)),
            );
        }
    }

    let outcome = BenchOutcome { records };
    let rows = outcome.rows();
    write_text(
        &config.out_dir.join("results.csv"),
        &emit_report(&rows, ReportFormat::Csv)?,
    )?;
    write_text(
        &config.out_dir.join("results.txt"),
        &bench_text_table(&outcome)?,
    )?;
    write_text(&config.out_dir.join("catalog.csv"), &catalog_csv())?;
    for (name, content) in &curve_files {
        write_text(&config.out_dir.join(name), content)?;
    }
    Ok(outcome)
}

fn bench_text_table(outcome: &BenchOutcome) -> Result<String> {
    if outcome.records.is_empty() {
        return Err(Error::Config("refusing to emit an empty report".into()));
    }
    let mut table = emit_report(&outcome.rows(), ReportFormat::TextTable)?;
    // Evaluation budgets differ per algorithm; report them for
    // fair-budget comparisons.
    let mut per_algo: BTreeMap<&str, u64> = BTreeMap::new();
    for record in &outcome.records {
        per_algo.insert(&record.row.algorithm, record.evaluations_per_run);
    }
    table.push('\n');
    for (algo, evals) in per_algo {
        table.push_str(&format!("{algo}: {evals} objective evaluations per run\n"));
    }
    Ok(table)
}

/// Per-(map, algorithm) outcome of the path study.
#[derive(Debug, Clone)]
pub struct PathRecord {
    pub map: String,
    pub algorithm: String,
    /// Shortest feasible (zero-collision) path length observed anywhere
    /// across all runs, with its decision vector.
    pub best_feasible: Option<(f64, Vec<f64>)>,
    /// Collision count of the reported winner, recomputed from the
    /// decision vector as a check; zero whenever a winner exists.
    pub winner_collisions: Option<u32>,
    /// Mean over runs of each run's best feasible length.
    pub mean_feasible: Option<f64>,
    /// How many of the runs observed at least one feasible path.
    pub feasible_runs: u32,
    /// Best objective value across runs; under the pure-penalty
    /// objective this may belong to an infeasible path.
    pub objective_best: f64,
    pub objective_best_collisions: u32,
    pub oracle_length: f64,
    pub evaluations_per_run: u64,
}

#[derive(Debug, Clone)]
pub struct PathOutcome {
    pub records: Vec<PathRecord>,
    pub map_names: Vec<String>,
}

impl PathOutcome {
    pub fn record(&self, map: &str, algorithm: AlgorithmKind) -> Option<&PathRecord> {
        let a = algorithm.to_string();
        self.records
            .iter()
            .find(|r| r.map == map && r.algorithm == a)
    }
}

fn load_or_generate_maps(config: &ExperimentConfig) -> Result<Vec<(String, GridMap, bool)>> {
    if !config.maps.is_empty() {
        let mut maps = Vec::new();
        for (i, path) in config.maps.iter().enumerate() {
            let map = map_io::load_map(path)?;
            if !map.has_free_route() {
                return Err(Error::InfeasibleMap);
            }
            maps.push((format!("map{}", i + 1), map, false));
        }
        return Ok(maps);
    }
    if config.gen_maps == 0 {
        return Err(Error::Config(
            "path mode needs map files or gen_maps > 0".into(),
        ));
    }
    let mut maps = Vec::new();
    for i in 0..config.gen_maps {
        let map = generate_map(
            config.map_seed.wrapping_add(i as u64),
            config.path.width,
            config.path.height,
            config.density,
            config.path.start,
            config.path.goal,
        )?;
        maps.push((format!("map{}", i + 1), map, true));
    }
    Ok(maps)
}

/// Run the path study on loaded or generated maps: `runs` seeded runs
/// per (algorithm, map), reporting the best feasible path, its collision
/// count, and the visibility-graph oracle length per map.
pub fn run_path_experiment(config: &ExperimentConfig) -> Result<PathOutcome> {
    config.validate_common()?;
    let maps = load_or_generate_maps(config)?;

    let mut records = Vec::new();
    let mut winner_files: BTreeMap<String, String> = BTreeMap::new();
    let mut curve_files: BTreeMap<String, String> = BTreeMap::new();

    for (map_name, map, generated) in &maps {
        if *generated {
            map_io::save_map(map, &{
                let dir = config.out_dir.join("maps");
                std::fs::create_dir_all(&dir)?;
                dir.join(format!("{map_name}.json"))
            })?;
        }
        let oracle_length = shortest_path_oracle(map)?;
        let penalty = PenaltyConfig {
            coefficient: config.path.penalty,
            additive: config.path.additive_penalty,
        };
        let problem = PathProblem::new(map.clone(), config.path.waypoints, penalty)?;

        for &kind in &config.algorithms {
            let mut per_run_feasible: Vec<(f64, Vec<f64>)> = Vec::new();
            let mut objective_best: Option<RunResult> = None;
            let mut curves = Vec::with_capacity(config.runs as usize);
            let mut evaluations = 0;

            for run_index in 0..config.runs {
                let seed = config.run_seed(run_index);
                let feasible: Arc<FeasibleBest> = Arc::new(Mutex::new(None));
                let sink = Arc::clone(&feasible);
                let objective = problem.objective_spec_with(move |x, evaluation| {
                    if evaluation.collisions == 0 {
                        let mut best = sink.lock().expect("tracker poisoned");
                        if best
                            .as_ref()
                            .is_none_or(|(len, _)| evaluation.length < *len)
                        {
                            *best = Some((evaluation.length, x.to_vec()));
                        }
                    }
                });
                let run_config = RunConfig {
                    population: config.population,
                    iterations: config.iterations,
                    seed,
                };
                let mut optimizer = config.optimizer(kind);
                let result = run(optimizer.as_mut(), &objective, &run_config)?;
                evaluations = result.evaluations;
                curves.push(result.curve.clone());
                if objective_best
                    .as_ref()
                    .is_none_or(|b| result.best_fitness < b.best_fitness)
                {
                    objective_best = Some(result);
                }
                let found = feasible.lock().expect("tracker poisoned").take();
                if let Some(found) = found {
                    per_run_feasible.push(found);
                }
            }

            let objective_best = objective_best.expect("runs >= 1");
            let objective_eval = problem.evaluate(&objective_best.best_position);
            let best_feasible = per_run_feasible
                .iter()
                .min_by(|a, b| a.0.total_cmp(&b.0))
                .cloned();
            let mean_feasible = (!per_run_feasible.is_empty()).then(|| {
                per_run_feasible.iter().map(|(len, _)| *len).sum::<f64>()
                    / per_run_feasible.len() as f64
            });
            let winner_collisions = best_feasible.as_ref().map(|(_, decision)| {
                let evaluation = problem.evaluate(decision);
                evaluation.collisions
            });

            if let Some((_, decision)) = &best_feasible {
                let path = problem.decode(decision);
                let mut csv = String::from("x,y\n");
                for (x, y) in path.points {
                    csv.push_str(&format!("{x:e},{y:e}\n"));
                }
                winner_files.insert(format!("paths/path_{map_name}_{kind}.csv"), csv);
            }
            curve_files.insert(
                format!("curves/path_{map_name}_{kind}.csv"),
                curve_csv(&mean_curve(&curves)),
            );

            records.push(PathRecord {
                map: map_name.clone(),
                algorithm: kind.to_string(),
                best_feasible,
                winner_collisions,
                mean_feasible,
                feasible_runs: per_run_feasible.len() as u32,
                objective_best: objective_best.best_fitness,
                objective_best_collisions: objective_eval.collisions,
                oracle_length,
                evaluations_per_run: evaluations,
            });
        }
    }

    let outcome = PathOutcome {
        records,
        map_names: maps.iter().map(|(name, _, _)| name.clone()).collect(),
    };
    write_text(
        &config.out_dir.join("path_results.csv"),
        &path_results_csv(&outcome),
    )?;
    write_text(
        &config.out_dir.join("path_results.txt"),
        &path_text_table(&outcome),
    )?;
    for (name, content) in winner_files.iter().chain(curve_files.iter()) {
        write_text(&config.out_dir.join(name), content)?;
    }
    Ok(outcome)
}

fn fmt_opt(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:e}"),
        None => "none".to_string(),
    }
}

fn path_results_csv(outcome: &PathOutcome) -> String {
    let mut out = String::from(
        "map,algorithm,best_feasible_m,winner_collisions,mean_feasible_m,feasible_runs,objective_best,objective_best_collisions,oracle_m\n",
    );
    let mut rows: Vec<&PathRecord> = outcome.records.iter().collect();
    rows.sort_by(|a, b| {
        (a.map.len(), &a.map, &a.algorithm).cmp(&(b.map.len(), &b.map, &b.algorithm))
    });
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{:e},{},{:e}\n",
            r.map,
            r.algorithm,
            fmt_opt(r.best_feasible.as_ref().map(|(len, _)| *len)),
            r.winner_collisions
                .map_or("none".to_string(), |c| c.to_string()),
            fmt_opt(r.mean_feasible),
            r.feasible_runs,
            r.objective_best,
            r.objective_best_collisions,
            r.oracle_length
        ));
    }
    out
}

fn path_text_table(outcome: &PathOutcome) -> String {
    let mut out = format!(
        "{:<8} {:<10} {:>12} {:>8} {:>12} {:>6} {:>12} {:>6} {:>10}\n",
        "map", "algorithm", "best[m]", "nO", "mean[m]", "runs", "obj_best", "obj_nO", "oracle[m]"
    );
    let mut rows: Vec<&PathRecord> = outcome.records.iter().collect();
    rows.sort_by(|a, b| {
        (a.map.len(), &a.map, &a.algorithm).cmp(&(b.map.len(), &b.map, &b.algorithm))
    });
    for r in rows {
        out.push_str(&format!(
            "{:<8} {:<10} {:>12} {:>8} {:>12} {:>6} {:>12.4} {:>6} {:>10.4}\n",
            r.map,
            r.algorithm,
            r.best_feasible
                .as_ref()
                .map_or("none".to_string(), |(len, _)| format!("{len:.4}")),
            r.winner_collisions
                .map_or("-".to_string(), |c| c.to_string()),
            r.mean_feasible
                .map_or("none".to_string(), |m| format!("{m:.4}")),
            r.feasible_runs,
            r.objective_best,
            r.objective_best_collisions,
            r.oracle_length
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_bench_config(dir: &Path) -> ExperimentConfig {
        ExperimentConfig {
            algorithms: vec![AlgorithmKind::Igwo, AlgorithmKind::Gwo],
            runs: 2,
            population: 10,
            iterations: 20,
            functions: vec!["F1".into(), "F9".into()],
            out_dir: dir.to_path_buf(),
            ..ExperimentConfig::default()
        }
    }

    #[test]
    fn config_defaults_parse_from_empty_toml() {
        let config = parse_config_str("").unwrap();
        assert_eq!(config.runs, 30);
        assert_eq!(config.population, 40);
        assert_eq!(config.iterations, 200);
        assert_eq!(config.algorithms, ALL_ALGORITHMS.to_vec());
        assert!(matches!(config.mode, Mode::Bench));
    }

    #[test]
    fn config_rejects_unknown_fields_and_algorithms() {
        assert!(parse_config_str("unknown_field = 3").is_err());
        assert!(parse_config_str("algorithms = [\"abc\"]").is_err());
        assert!(parse_config_str("[igwo]\nnot_a_knob = 1").is_err());
    }

    #[test]
    fn config_round_trips_through_toml() {
        let config = ExperimentConfig::default();
        let text = toml::to_string(&config).unwrap();
        let back = parse_config_str(&text).unwrap();
        assert_eq!(back.base_seed, config.base_seed);
        assert_eq!(back.algorithms, config.algorithms);
        assert_eq!(back.path.waypoints, config.path.waypoints);
    }

    #[test]
    fn unknown_function_fails_before_any_run() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = tiny_bench_config(dir.path());
        config.functions = vec!["F99".into()];
        let err = run_bench_experiment(&config).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        assert!(!dir.path().join("results.csv").exists());
    }

    #[test]
    fn bench_experiment_writes_expected_files() {
        let dir = tempfile::tempdir().unwrap();
        let config = tiny_bench_config(dir.path());
        let outcome = run_bench_experiment(&config).unwrap();
        assert_eq!(outcome.records.len(), 4);
        for name in [
            "results.csv",
            "results.txt",
            "catalog.csv",
            "curves/bench_F1_igwo.csv",
            "curves/bench_F9_gwo.csv",
        ] {
            assert!(dir.path().join(name).exists(), "{name} missing");
        }
        let csv = std::fs::read_to_string(dir.path().join("results.csv")).unwrap();
        let rows = parse_report_csv(&csv).unwrap();
        assert_eq!(rows.len(), 4);
        let catalog = std::fs::read_to_string(dir.path().join("catalog.csv")).unwrap();
        assert_eq!(catalog.lines().count(), 14);
    }

    #[test]
    fn bench_experiment_is_deterministic_byte_for_byte() {
        let dir_a = tempfile::tempdir().unwrap();
        let dir_b = tempfile::tempdir().unwrap();
        run_bench_experiment(&tiny_bench_config(dir_a.path())).unwrap();
        run_bench_experiment(&tiny_bench_config(dir_b.path())).unwrap();
        for name in ["results.csv", "results.txt", "curves/bench_F1_igwo.csv"] {
            let a = std::fs::read(dir_a.path().join(name)).unwrap();
            let b = std::fs::read(dir_b.path().join(name)).unwrap();
            assert_eq!(a, b, "{name} differs between identical configs");
        }
    }

    #[test]
    fn single_run_has_zero_std() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = tiny_bench_config(dir.path());
        config.runs = 1;
        config.functions = vec!["F1".into()];
        let outcome = run_bench_experiment(&config).unwrap();
        assert!(outcome.records.iter().all(|r| r.row.std == 0.0));
    }

    #[test]
    fn path_experiment_smoke() {
        let dir = tempfile::tempdir().unwrap();
        let config = ExperimentConfig {
            mode: Mode::Path,
            algorithms: vec![AlgorithmKind::Igwo],
            runs: 2,
            population: 20,
            iterations: 60,
            gen_maps: 1,
            density: 0.12,
            map_seed: 901,
            out_dir: dir.path().to_path_buf(),
            path: PathSettings {
                additive_penalty: true,
                ..PathSettings::default()
            },
            ..ExperimentConfig::default()
        };
        let outcome = run_path_experiment(&config).unwrap();
        assert_eq!(outcome.records.len(), 1);
        let record = &outcome.records[0];
        assert!(record.oracle_length >= 26.870057685088806 - 1e-9);
        if let Some((length, _)) = &record.best_feasible {
            assert!(*length >= record.oracle_length - 1e-9);
            assert_eq!(record.winner_collisions, Some(0));
            assert!(dir.path().join("paths/path_map1_igwo.csv").exists());
        }
        assert!(dir.path().join("path_results.csv").exists());
        assert!(dir.path().join("maps/map1.json").exists());
    }

    #[test]
    fn path_experiment_rejects_blocked_map_files() {
        let dir = tempfile::tempdir().unwrap();
        // A wall map is structurally valid but has no free route.
        let wall: std::collections::BTreeSet<(u32, u32)> = (0..20).map(|c| (c, 10u32)).collect();
        let map = GridMap::new(20, 20, 1.0, wall, (0.5, 0.5), (19.5, 19.5)).unwrap();
        let path = dir.path().join("blocked.json");
        map_io::save_map(&map, &path).unwrap();
        let config = ExperimentConfig {
            mode: Mode::Path,
            maps: vec![path],
            out_dir: dir.path().join("out"),
            ..ExperimentConfig::default()
        };
        let err = run_path_experiment(&config).unwrap_err();
        assert!(matches!(err, Error::InfeasibleMap));
    }

    #[test]
    fn run_seeds_are_base_plus_index() {
        let config = ExperimentConfig {
            base_seed: 100,
            ..ExperimentConfig::default()
        };
        assert_eq!(config.run_seed(0), 100);
        assert_eq!(config.run_seed(7), 107);
    }
}
