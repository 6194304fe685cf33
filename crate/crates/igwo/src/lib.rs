//! Swarm-intelligence optimization library built around an Improved
//! Grey Wolf Optimizer, with GWO/PSO/WOA baselines, the classical
//! 13-function benchmark suite, and a grid-based UAV shortest-path
//! objective.
//!
//! The improved optimizer wraps the classic GWO exploitation phase with
//! two extra phases per iteration: a cooperative-predation update that
//! blends the population centroid with spiral motion relative to the
//! leading wolves, and a lens-based opposition reflection through the
//! bounds midpoint that fights premature convergence.
//!
//! Every stochastic draw flows through a seeded [`core::RngStream`], so
//! a `(algorithm, objective, config)` triple fully determines a run.
//!
//! ```
//! use igwo::core::{run, ObjectiveSpec, RunConfig};
//! use igwo::igwo::Igwo;
//!
//! let sphere = ObjectiveSpec::uniform(8, -100.0, 100.0, |x| {
//!     x.iter().map(|v| v * v).sum()
//! })
//! .unwrap();
//! let config = RunConfig { population: 20, iterations: 60, seed: 7 };
//! let result = run(&mut Igwo::default(), &sphere, &config).unwrap();
//! assert!(result.best_fitness < 1e-6);
//! ```

pub mod baselines;
pub mod bench;
pub mod core;
pub mod error;
pub mod experiment;
pub mod igwo;
pub mod pathplan;

pub use crate::core::{run, Agent, ObjectiveSpec, RngStream, RunConfig, RunResult};
pub use crate::error::{Error, Result};
pub use crate::igwo::Igwo;
