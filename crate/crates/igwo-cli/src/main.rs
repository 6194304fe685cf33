//! Experiment harness CLI: runs benchmark and path-planning studies and
//! writes tables, convergence curves, and plot-ready data files.
//!
//! Settings come from an optional TOML config file; command-line flags
//! override individual fields. Exit codes: 0 success, 2 configuration,
//! 3 evaluation, 4 I/O.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use igwo::experiment::{self, emit_report, AlgorithmKind, ExperimentConfig, Mode, ReportFormat};
use igwo::Error;

#[derive(Debug, Parser)]
#[command(
    name = "igwo",
    about = "Swarm-optimizer experiment harness: benchmark suite and grid path planning"
)]
struct Cli {
    /// TOML config file; flags below override its fields.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Experiment mode: bench or path.
    #[arg(long)]
    mode: Option<String>,

    /// Algorithm to include (repeatable): igwo, gwo, pso, woa.
    #[arg(long = "algo")]
    algorithms: Vec<String>,

    /// Independent runs per (algorithm, problem).
    #[arg(long)]
    runs: Option<u32>,

    /// Population size.
    #[arg(long = "pop")]
    population: Option<usize>,

    /// Iteration budget per run.
    #[arg(long = "iters")]
    iterations: Option<usize>,

    /// Base seed; run i uses base_seed + i.
    #[arg(long)]
    seed: Option<u64>,

    /// Benchmark function to include (repeatable), e.g. F1.
    #[arg(long = "func")]
    functions: Vec<String>,

    /// Map file for path mode (repeatable).
    #[arg(long = "map")]
    maps: Vec<PathBuf>,

    /// Generate this many random maps instead of loading files.
    #[arg(long = "gen-maps")]
    gen_maps: Option<u32>,

    /// Obstacle density of generated maps.
    #[arg(long)]
    density: Option<f64>,

    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn build_config(cli: &Cli) -> Result<ExperimentConfig, Error> {
    let mut config = match &cli.config {
        Some(path) => experiment::load_config(path)?,
        None => ExperimentConfig::default(),
    };
    if let Some(mode) = &cli.mode {
        config.mode = match mode.as_str() {
            "bench" => Mode::Bench,
            "path" => Mode::Path,
            other => return Err(Error::Config(format!("unknown mode: {other}"))),
        };
    }
    if !cli.algorithms.is_empty() {
        config.algorithms = cli
            .algorithms
            .iter()
            .map(|s| s.parse::<AlgorithmKind>())
            .collect::<Result<_, _>>()?;
    }
    if let Some(runs) = cli.runs {
        config.runs = runs;
    }
    if let Some(population) = cli.population {
        config.population = population;
    }
    if let Some(iterations) = cli.iterations {
        config.iterations = iterations;
    }
    if let Some(seed) = cli.seed {
        config.base_seed = seed;
    }
    if !cli.functions.is_empty() {
        config.functions = cli.functions.clone();
    }
    if !cli.maps.is_empty() {
        config.maps = cli.maps.clone();
    }
    if let Some(gen_maps) = cli.gen_maps {
        config.gen_maps = gen_maps;
    }
    if let Some(density) = cli.density {
        config.density = density;
    }
    if let Some(out) = &cli.out {
        config.out_dir = out.clone();
    }
    Ok(config)
}

fn execute(cli: &Cli) -> Result<(), Error> {
    let config = build_config(cli)?;
    match config.mode {
        Mode::Bench => {
            let outcome = experiment::run_bench_experiment(&config)?;
            print!("{}", emit_report(&outcome.rows(), ReportFormat::TextTable)?);
        }
        Mode::Path => {
            let outcome = experiment::run_path_experiment(&config)?;
            let table = std::fs::read_to_string(config.out_dir.join("path_results.txt"))?;
            print!("{table}");
            drop(outcome);
        }
    }
    println!("results written to {}", config.out_dir.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error[{}]: {err}", err.category());
            match err.category() {
                "config" => ExitCode::from(2),
                "evaluation" => ExitCode::from(3),
                _ => ExitCode::from(4),
            }
        }
    }
}
