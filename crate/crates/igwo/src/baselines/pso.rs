//! Global-best particle swarm with linearly decaying inertia and a
//! velocity clamp.

use crate::core::{Agent, Evaluator, RngStream, SwarmOptimizer};
use crate::error::{Error, Result};

/// Textbook PSO settings: inertia 0.9 -> 0.4, c1 = c2 = 2.0, velocities
/// clamped to a fraction of each dimension's range.
#[derive(Debug, Clone, Copy)]
pub struct PsoParams {
    pub inertia_start: f64,
    pub inertia_end: f64,
    pub c1: f64,
    pub c2: f64,
    pub v_max_fraction: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        PsoParams {
            inertia_start: 0.9,
            inertia_end: 0.4,
            c1: 2.0,
            c2: 2.0,
            v_max_fraction: 0.2,
        }
    }
}

impl PsoParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.inertia_start >= self.inertia_end && self.inertia_end >= 0.0) {
            return Err(Error::Config(format!(
                "inertia must satisfy start >= end >= 0, got {} -> {}",
                self.inertia_start, self.inertia_end
            )));
        }
        if self.c1 < 0.0 || self.c2 < 0.0 {
            return Err(Error::Config("c1 and c2 must be non-negative".into()));
        }
        if !(self.v_max_fraction > 0.0 && self.v_max_fraction <= 1.0) {
            return Err(Error::Config(format!(
                "v_max_fraction must lie in (0, 1], got {}",
                self.v_max_fraction
            )));
        }
        Ok(())
    }
}

/// Per-particle bookkeeping: velocities, personal bests, and the swarm
/// best.
#[derive(Debug, Clone)]
struct PsoState {
    velocities: Vec<Vec<f64>>,
    personal_best: Vec<(Vec<f64>, f64)>,
    global_best: (Vec<f64>, f64),
}

#[derive(Debug, Clone)]
pub struct Pso {
    pub params: PsoParams,
    state: Option<PsoState>,
}

impl Default for Pso {
    fn default() -> Self {
        Pso::new(PsoParams::default())
    }
}

impl Pso {
    pub fn new(params: PsoParams) -> Self {
        Pso {
            params,
            state: None,
        }
    }
}

impl SwarmOptimizer for Pso {
    fn initialize(&mut self, population: &[Agent]) {
        let dim = population[0].position.len();
        let personal_best: Vec<(Vec<f64>, f64)> = population
            .iter()
            .map(|a| (a.position.clone(), a.fitness))
            .collect();
        let global_best = personal_best
            .iter()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("population is non-empty")
            .clone();
        self.state = Some(PsoState {
            velocities: vec![vec![0.0; dim]; population.len()],
            personal_best,
            global_best,
        });
    }

    fn iterate(
        &mut self,
        population: &mut [Agent],
        t: usize,
        budget: usize,
        eval: &mut Evaluator,
        rng: &mut RngStream,
    ) -> Result<()> {
        let params = self.params;
        let state = self
            .state
            .as_mut()
            .expect("initialize() runs before iterate()");
        let spec = eval.spec();
        let w = params.inertia_start
            - (params.inertia_start - params.inertia_end) * t as f64 / budget as f64;

        for (i, agent) in population.iter_mut().enumerate() {
            let velocity = &mut state.velocities[i];
            for (j, v) in velocity.iter_mut().enumerate() {
                let r_cog = rng.next_f64();
                let r_soc = rng.next_f64();
                let pbest = state.personal_best[i].0[j];
                let gbest = state.global_best.0[j];
                let x = agent.position[j];
                let mut vj =
                    w * *v + params.c1 * r_cog * (pbest - x) + params.c2 * r_soc * (gbest - x);
                let v_max = params.v_max_fraction * (spec.upper()[j] - spec.lower()[j]);
                vj = vj.clamp(-v_max, v_max);
                *v = vj;
                agent.position[j] = x + vj;
            }
            spec.clamp(&mut agent.position);
            agent.fitness = eval.evaluate(&agent.position)?;

            if agent.fitness < state.personal_best[i].1 {
                state.personal_best[i] = (agent.position.clone(), agent.fitness);
            }
            if agent.fitness < state.global_best.1 {
                state.global_best = (agent.position.clone(), agent.fitness);
            }
        }
        Ok(())
    }
}
