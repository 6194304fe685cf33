//! Whale Optimization Algorithm: shrinking encircling of the best
//! solution, random-agent exploration while `|A| >= 1`, and a
//! logarithmic spiral toward the best.

use crate::core::{Agent, Evaluator, RngStream, SwarmOptimizer};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct WoaParams {
    /// Shape constant `b` of the logarithmic spiral.
    pub spiral_b: f64,
    /// Probability of the encircling/exploration branch; the spiral is
    /// taken otherwise.
    pub spiral_probability: f64,
}

impl Default for WoaParams {
    fn default() -> Self {
        WoaParams {
            spiral_b: 1.0,
            spiral_probability: 0.5,
        }
    }
}

impl WoaParams {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.spiral_probability) {
            return Err(Error::Config(format!(
                "spiral_probability must lie in [0, 1], got {}",
                self.spiral_probability
            )));
        }
        Ok(())
    }
}

/// Encircling move toward a target: `X' = X_t - A |C X_t - X|` per
/// dimension with scalar coefficients.
pub fn woa_encircle(position: &[f64], target: &[f64], a_coef: f64, c_coef: f64) -> Vec<f64> {
    position
        .iter()
        .zip(target)
        .map(|(&x, &t)| t - a_coef * (c_coef * t - x).abs())
        .collect()
}

/// Spiral move toward the best: `X' = |X* - X| e^(b l) cos(2 pi l) + X*`.
pub fn woa_spiral(position: &[f64], best: &[f64], b: f64, l: f64) -> Vec<f64> {
    let shape = (b * l).exp() * (std::f64::consts::TAU * l).cos();
    position
        .iter()
        .zip(best)
        .map(|(&x, &s)| (s - x).abs() * shape + s)
        .collect()
}

#[derive(Debug, Clone)]
pub struct Woa {
    pub params: WoaParams,
    best: Option<(Vec<f64>, f64)>,
}

impl Default for Woa {
    fn default() -> Self {
        Woa::new(WoaParams::default())
    }
}

impl Woa {
    pub fn new(params: WoaParams) -> Self {
        Woa { params, best: None }
    }

    fn absorb(&mut self, population: &[Agent]) {
        for agent in population {
            match &self.best {
                Some((_, f)) if *f <= agent.fitness => {}
                _ => self.best = Some((agent.position.clone(), agent.fitness)),
            }
        }
    }
}

impl SwarmOptimizer for Woa {
    fn initialize(&mut self, population: &[Agent]) {
        self.absorb(population);
    }

    fn iterate(
        &mut self,
        population: &mut [Agent],
        t: usize,
        budget: usize,
        eval: &mut Evaluator,
        rng: &mut RngStream,
    ) -> Result<()> {
        self.absorb(population);
        let (best_pos, _) = self
            .best
            .clone()
            .expect("initialize() runs before iterate()");
        let spec = eval.spec();
        let a = 2.0 * (1.0 - t as f64 / budget as f64);
        let n = population.len();

        for i in 0..n {
            // Scalar draws per agent, as in the original formulation.
            let a_coef = 2.0 * a * rng.next_f64() - a;
            let c_coef = 2.0 * rng.next_f64();
            let l = rng.range_f64(-1.0, 1.0);
            let p = rng.next_f64();

            let mut next = if p < self.params.spiral_probability {
                if a_coef.abs() >= 1.0 {
                    let other = rng.index(n);
                    let target = population[other].position.clone();
                    woa_encircle(&population[i].position, &target, a_coef, c_coef)
                } else {
                    woa_encircle(&population[i].position, &best_pos, a_coef, c_coef)
                }
            } else {
                woa_spiral(&population[i].position, &best_pos, self.params.spiral_b, l)
            };
            spec.clamp(&mut next);
            population[i].fitness = eval.evaluate(&next)?;
            population[i].position = next;
        }
        self.absorb(population);
        Ok(())
    }
}
