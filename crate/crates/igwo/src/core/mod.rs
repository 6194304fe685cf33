//! Algorithm-agnostic swarm framework: agents, bounds, the seeded
//! randomness contract, and the generic run loop all optimizers plug into.

pub mod rng;

use std::sync::Arc;

use crate::error::{Error, Result};
pub use rng::RngStream;

/// A candidate solution: a position in objective space plus its cached
/// objective value (lower is better).
///
/// After every accepted update the cache is coherent (`fitness` equals
/// the objective at `position`) and every component lies inside the
/// search bounds.
#[derive(Debug, Clone)]
pub struct Agent {
    pub position: Vec<f64>,
    pub fitness: f64,
}

/// Shared objective function; interior mutability (for stochastic
/// objectives) must be synchronized by the closure itself.
pub type ObjectiveFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Minimization problem definition: dimension, per-dimension bounds, and
/// the objective itself.
///
/// Maximization problems must be negated by the caller.
#[derive(Clone)]
pub struct ObjectiveSpec {
    dimension: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
    objective: ObjectiveFn,
}

impl std::fmt::Debug for ObjectiveSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ObjectiveSpec")
            .field("dimension", &self.dimension)
            .field("lower", &self.lower)
            .field("upper", &self.upper)
            .finish_non_exhaustive()
    }
}

impl ObjectiveSpec {
    pub fn new(
        lower: Vec<f64>,
        upper: Vec<f64>,
        objective: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::Config(format!(
                "bounds must be non-empty and of equal length (got {} and {})",
                lower.len(),
                upper.len()
            )));
        }
        for (j, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            if !lo.is_finite() || !hi.is_finite() || lo >= hi {
                return Err(Error::Config(format!(
                    "invalid bounds on dimension {j}: [{lo}, {hi}]"
                )));
            }
        }
        Ok(ObjectiveSpec {
            dimension: lower.len(),
            lower,
            upper,
            objective: Arc::new(objective),
        })
    }

    /// Same bounds `[lo, hi]` on every dimension.
    pub fn uniform(
        dimension: usize,
        lo: f64,
        hi: f64,
        objective: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        Self::new(vec![lo; dimension], vec![hi; dimension], objective)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Raw objective call. Prefer [`Evaluator::evaluate`] inside runs so
    /// calls are counted and non-finite values abort the run.
    pub fn evaluate(&self, position: &[f64]) -> f64 {
        assert_eq!(
            position.len(),
            self.dimension,
            "position length {} does not match objective dimension {}",
            position.len(),
            self.dimension
        );
        (self.objective)(position)
    }

    /// Project each component onto `[lower_j, upper_j]`; components
    /// already inside are left untouched.
    pub fn clamp(&self, position: &mut [f64]) {
        assert_eq!(
            position.len(),
            self.dimension,
            "position length {} does not match objective dimension {}",
            position.len(),
            self.dimension
        );
        for ((x, &lo), &hi) in position.iter_mut().zip(&self.lower).zip(&self.upper) {
            *x = x.clamp(lo, hi);
        }
    }

    /// True when every component of `position` lies inside the bounds.
    pub fn contains(&self, position: &[f64]) -> bool {
        position.len() == self.dimension
            && position
                .iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((&x, &lo), &hi)| x >= lo && x <= hi)
    }
}

/// Run-level budget: population size, iteration count, and the seed that
/// makes the run replayable.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub population: usize,
    pub iterations: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            population: 40,
            iterations: 200,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.population < 4 {
            return Err(Error::Config(format!(
                "population must be at least 4 (alpha, beta, delta plus a follower), got {}",
                self.population
            )));
        }
        if self.iterations == 0 {
            return Err(Error::Config("iteration budget must be positive".into()));
        }
        Ok(())
    }
}

/// Outcome of one optimizer run.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    /// Best-so-far objective value recorded once per iteration, after all
    /// phases. Monotone non-increasing; the last entry equals
    /// `best_fitness`.
    pub curve: Vec<f64>,
    /// Exact number of objective calls made during the run.
    pub evaluations: u64,
}

/// Counts objective calls and aborts the run on non-finite values.
pub struct Evaluator<'a> {
    spec: &'a ObjectiveSpec,
    count: u64,
}

impl<'a> Evaluator<'a> {
    pub fn new(spec: &'a ObjectiveSpec) -> Self {
        Evaluator { spec, count: 0 }
    }

    pub fn spec(&self) -> &'a ObjectiveSpec {
        self.spec
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn evaluate(&mut self, position: &[f64]) -> Result<f64> {
        let value = self.spec.evaluate(position);
        self.count += 1;
        if !value.is_finite() {
            return Err(Error::Evaluation {
                value,
                position: position.to_vec(),
            });
        }
        Ok(value)
    }
}

/// Per-iteration update procedure plugged into [`run`].
///
/// `iterate` receives the population, the zero-based iteration index `t`,
/// the total budget `T`, the shared evaluator, and the run's random
/// stream. It must leave every agent inside bounds with a coherent
/// fitness cache. Implementations may overwrite agents unconditionally;
/// the run loop tracks the global best independently.
pub trait SwarmOptimizer {
    /// Called once with the freshly initialized population, before the
    /// first iteration.
    fn initialize(&mut self, _population: &[Agent]) {}

    fn iterate(
        &mut self,
        population: &mut [Agent],
        t: usize,
        budget: usize,
        eval: &mut Evaluator,
        rng: &mut RngStream,
    ) -> Result<()>;
}

/// Draw `n` agents uniformly inside the bounds and evaluate each once.
pub fn initialize_population(
    eval: &mut Evaluator,
    n: usize,
    rng: &mut RngStream,
) -> Result<Vec<Agent>> {
    let spec = eval.spec();
    let mut agents = Vec::with_capacity(n);
    for _ in 0..n {
        let position: Vec<f64> = spec
            .lower()
            .iter()
            .zip(spec.upper())
            .map(|(&lo, &hi)| rng.range_f64(lo, hi))
            .collect();
        let fitness = eval.evaluate(&position)?;
        agents.push(Agent { position, fitness });
    }
    Ok(agents)
}

/// Execute initialization plus `config.iterations` optimizer iterations.
///
/// The global best is tracked outside the population, so an algorithm
/// that overwrites agents unconditionally can never lose the best
/// solution found. The convergence curve is recorded once per iteration
/// after all phases.
pub fn run(
    optimizer: &mut dyn SwarmOptimizer,
    spec: &ObjectiveSpec,
    config: &RunConfig,
) -> Result<RunResult> {
    config.validate()?;
    let mut rng = RngStream::new(config.seed);
    let mut eval = Evaluator::new(spec);
    let mut population = initialize_population(&mut eval, config.population, &mut rng)?;
    optimizer.initialize(&population);

    let mut best = population
        .iter()
        .min_by(|a, b| a.fitness.total_cmp(&b.fitness))
        .expect("population is non-empty")
        .clone();

    let mut curve = Vec::with_capacity(config.iterations);
    for t in 0..config.iterations {
        optimizer.iterate(&mut population, t, config.iterations, &mut eval, &mut rng)?;
        debug_assert!(
            population.iter().all(|a| spec.contains(&a.position)),
            "agent escaped bounds at iteration {t}"
        );
        for agent in &population {
            if agent.fitness < best.fitness {
                best = agent.clone();
            }
        }
        curve.push(best.fitness);
    }

    Ok(RunResult {
        best_position: best.position,
        best_fitness: best.fitness,
        curve,
        evaluations: eval.count(),
    })
}
