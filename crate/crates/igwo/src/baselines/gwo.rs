//! Plain Grey Wolf Optimizer: leader selection plus the exploitation
//! step, with no predation or opposition phases.

use crate::core::{Agent, Evaluator, RngStream, SwarmOptimizer};
use crate::error::Result;
use crate::igwo::{control_parameter, gwo_exploitation_step, Leaders};

/// Canonical GWO. Reuses the exact exploitation implementation of the
/// improved optimizer, so the two stay byte-identical on pinned draws.
#[derive(Debug, Clone, Default)]
pub struct Gwo;

impl SwarmOptimizer for Gwo {
    fn iterate(
        &mut self,
        population: &mut [Agent],
        t: usize,
        budget: usize,
        eval: &mut Evaluator,
        rng: &mut RngStream,
    ) -> Result<()> {
        let leaders = Leaders::select(population);
        let a = control_parameter(t, budget);
        gwo_exploitation_step(population, &leaders, a, eval, rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{run, ObjectiveSpec, RunConfig};
    use crate::igwo::Igwo;

    #[test]
    fn constant_objective_keeps_fitness() {
        let spec = ObjectiveSpec::uniform(3, -1.0, 1.0, |_| 2.5).unwrap();
        let result = run(
            &mut Gwo,
            &spec,
            &RunConfig {
                population: 8,
                iterations: 10,
                seed: 6,
            },
        )
        .unwrap();
        assert_eq!(result.best_fitness, 2.5);
        assert!(result.curve.iter().all(|&v| v == 2.5));
    }

    #[test]
    fn matches_igwo_with_both_strategies_disabled() {
        let spec =
            ObjectiveSpec::uniform(10, -100.0, 100.0, |x| x.iter().map(|v| v * v).sum()).unwrap();
        let cfg = RunConfig {
            population: 12,
            iterations: 40,
            seed: 31,
        };
        let plain = run(&mut Gwo, &spec, &cfg).unwrap();
        let mut ablated = Igwo {
            use_acp: false,
            use_lobl: false,
            ..Igwo::default()
        };
        let improved = run(&mut ablated, &spec, &cfg).unwrap();
        assert_eq!(plain.best_fitness, improved.best_fitness);
        assert_eq!(plain.best_position, improved.best_position);
        assert_eq!(plain.curve, improved.curve);
        assert_eq!(plain.evaluations, improved.evaluations);
    }

    #[test]
    fn evaluation_accounting() {
        let spec =
            ObjectiveSpec::uniform(4, -10.0, 10.0, |x| x.iter().map(|v| v * v).sum()).unwrap();
        let result = run(
            &mut Gwo,
            &spec,
            &RunConfig {
                population: 9,
                iterations: 5,
                seed: 0,
            },
        )
        .unwrap();
        assert_eq!(result.evaluations, 9 + 5 * 9);
    }
}
