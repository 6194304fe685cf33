//! Improved Grey Wolf Optimizer: the cooperative-predation update, the
//! lens-based opposition reflection, and the iteration pipeline that
//! stitches them around the classic GWO exploitation phase.
//!
//! Pipeline per iteration: select leaders, cooperative-predation step,
//! re-select leaders, GWO exploitation, opposition reflection.

use crate::core::{Agent, Evaluator, ObjectiveSpec, RngStream, SwarmOptimizer};
use crate::error::{Error, Result};

/// The three lowest-fitness agents, strictly ordered by fitness.
///
/// Ties break toward the lower agent index, so selection is a total
/// order even with duplicated fitness values.
#[derive(Debug, Clone)]
pub struct Leaders {
    pub alpha: Agent,
    pub beta: Agent,
    pub delta: Agent,
}

impl Leaders {
    pub fn select(agents: &[Agent]) -> Leaders {
        assert!(
            agents.len() >= 3,
            "leader selection needs at least 3 agents, got {}",
            agents.len()
        );
        let mut order: Vec<usize> = (0..agents.len()).collect();
        order.sort_by(|&i, &j| {
            agents[i]
                .fitness
                .total_cmp(&agents[j].fitness)
                .then(i.cmp(&j))
        });
        Leaders {
            alpha: agents[order[0]].clone(),
            beta: agents[order[1]].clone(),
            delta: agents[order[2]].clone(),
        }
    }
}

/// Control parameter `a`, declining linearly from 2 towards 0 over the
/// run: `a = 2 (1 - t / T)` for `t` in `0..T`.
pub fn control_parameter(t: usize, budget: usize) -> f64 {
    assert!(budget > 0, "iteration budget must be positive");
    assert!(t < budget, "iteration index {t} out of budget {budget}");
    2.0 * (1.0 - t as f64 / budget as f64)
}

/// Component-wise mean position of the whole population.
pub fn population_centroid(agents: &[Agent]) -> Vec<f64> {
    assert!(!agents.is_empty(), "centroid of an empty population");
    let dim = agents[0].position.len();
    let mut mean = vec![0.0; dim];
    for agent in agents {
        for (m, &x) in mean.iter_mut().zip(&agent.position) {
            *m += x;
        }
    }
    let n = agents.len() as f64;
    for m in &mut mean {
        *m /= n;
    }
    mean
}

/// Spiral factor guiding leader-relative motion:
/// `gamma = 2 e^(r4^s) sin(2 pi r4)` with `s = (T - t) / T`.
///
/// With the zero-based iteration index used here, `s` spans `(0, 1]`
/// exactly as the one-based `(T - t + 1) / T` convention does. The
/// magnitude is strictly below `2e` for every admissible input.
pub fn spiral_factor(r4: f64, t: usize, budget: usize) -> f64 {
    assert!((0.0..1.0).contains(&r4), "r4 must lie in [0, 1), got {r4}");
    assert!(t < budget, "iteration index {t} out of budget {budget}");
    let s = (budget - t) as f64 / budget as f64;
    2.0 * r4.powf(s).exp() * (std::f64::consts::TAU * r4).sin()
}

/// One pair of per-agent cooperative-predation draws.
#[derive(Debug, Clone, Copy)]
pub struct AcpDraws {
    pub r3: f64,
    pub r4: f64,
}

/// Candidate position of the cooperative-predation update.
///
/// `r3` both selects the branch and scales the centroid term; with
/// `r3 < 0.5` the agent moves relative to alpha, otherwise relative to
/// the beta/delta midpoint. `r3` and the spiral factor are scalars
/// applied to every dimension.
pub fn acp_candidate(
    position: &[f64],
    centroid: &[f64],
    leaders: &Leaders,
    draws: &AcpDraws,
    t: usize,
    budget: usize,
) -> Vec<f64> {
    let gamma = spiral_factor(draws.r4, t, budget);
    let toward_alpha = draws.r3 < 0.5;
    position
        .iter()
        .enumerate()
        .map(|(j, &x)| {
            let target = if toward_alpha {
                leaders.alpha.position[j]
            } else {
                0.5 * (leaders.beta.position[j] + leaders.delta.position[j])
            };
            draws.r3 * centroid[j] + gamma * (target - x)
        })
        .collect()
}

/// Cooperative-predation step over the whole population.
///
/// The centroid is computed once from the population at entry and held
/// fixed; candidates are clamped, evaluated, and accepted only on strict
/// improvement.
pub fn acp_step(
    agents: &mut [Agent],
    leaders: &Leaders,
    t: usize,
    budget: usize,
    eval: &mut Evaluator,
    rng: &mut RngStream,
) -> Result<()> {
    let centroid = population_centroid(agents);
    let spec = eval.spec();
    for agent in agents.iter_mut() {
        let draws = AcpDraws {
            r3: rng.next_f64(),
            r4: rng.next_f64(),
        };
        let mut candidate = acp_candidate(&agent.position, &centroid, leaders, &draws, t, budget);
        spec.clamp(&mut candidate);
        let fitness = eval.evaluate(&candidate)?;
        if fitness < agent.fitness {
            agent.position = candidate;
            agent.fitness = fitness;
        }
    }
    Ok(())
}

/// Per-leader coefficient vectors of the GWO position update:
/// `A_j = 2 a r1_j - a` and `C_j = 2 r2_j`.
#[derive(Debug, Clone)]
pub struct GwoCoefficients {
    pub a: f64,
    pub a_coef: Vec<f64>,
    pub c_coef: Vec<f64>,
}

impl GwoCoefficients {
    /// Draw fresh coefficients; one `(r1, r2)` pair per dimension.
    pub fn draw(a: f64, dimension: usize, rng: &mut RngStream) -> Self {
        let mut a_coef = Vec::with_capacity(dimension);
        let mut c_coef = Vec::with_capacity(dimension);
        for _ in 0..dimension {
            a_coef.push(2.0 * a * rng.next_f64() - a);
            c_coef.push(2.0 * rng.next_f64());
        }
        GwoCoefficients { a, a_coef, c_coef }
    }

    /// Pinned coefficients for tests and reproduction of hand
    /// calculations.
    pub fn pinned(a: f64, a_coef: Vec<f64>, c_coef: Vec<f64>) -> Self {
        assert_eq!(a_coef.len(), c_coef.len());
        assert!(a_coef.iter().all(|&v| v.abs() <= a));
        assert!(c_coef.iter().all(|&v| (0.0..2.0).contains(&v)));
        GwoCoefficients { a, a_coef, c_coef }
    }
}

/// Candidate contributed by a single leader:
/// `X_L - A * |C * X_L - X|` per dimension.
pub fn leader_candidate(position: &[f64], leader: &[f64], coef: &GwoCoefficients) -> Vec<f64> {
    position
        .iter()
        .enumerate()
        .map(|(j, &x)| {
            let distance = (coef.c_coef[j] * leader[j] - x).abs();
            leader[j] - coef.a_coef[j] * distance
        })
        .collect()
}

/// Classic GWO exploitation: every agent moves to the mean of the three
/// leader candidates and is replaced unconditionally.
///
/// Draw order per agent: alpha, beta, delta; within each leader one
/// `(r1, r2)` pair per dimension. Shared verbatim by the GWO baseline
/// and the improved optimizer.
pub fn gwo_exploitation_step(
    agents: &mut [Agent],
    leaders: &Leaders,
    a: f64,
    eval: &mut Evaluator,
    rng: &mut RngStream,
) -> Result<()> {
    assert!(
        (0.0..=2.0).contains(&a),
        "control parameter out of [0, 2]: {a}"
    );
    let spec = eval.spec();
    let dim = spec.dimension();
    for agent in agents.iter_mut() {
        let mut next = vec![0.0; dim];
        for leader in [&leaders.alpha, &leaders.beta, &leaders.delta] {
            let coef = GwoCoefficients::draw(a, dim, rng);
            let candidate = leader_candidate(&agent.position, &leader.position, &coef);
            for (acc, c) in next.iter_mut().zip(&candidate) {
                *acc += c / 3.0;
            }
        }
        spec.clamp(&mut next);
        agent.fitness = eval.evaluate(&next)?;
        agent.position = next;
    }
    Ok(())
}

/// Lens opposition settings. `k` is the magnification scale of the
/// reflection; large values pull reflections toward the bounds midpoint.
#[derive(Debug, Clone, Copy)]
pub struct LoblConfig {
    k: f64,
}

impl Default for LoblConfig {
    fn default() -> Self {
        LoblConfig { k: 1.0e4 }
    }
}

impl LoblConfig {
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::Config(format!(
                "lens scale k must be finite and positive, got {k}"
            )));
        }
        Ok(LoblConfig { k })
    }

    pub fn k(&self) -> f64 {
        self.k
    }
}

/// Reflect a position through the bounds midpoint with lens scale `k`:
/// `X'_j = (a_j + b_j) / 2 + (a_j + b_j) / (2k) - X_j / k`,
/// where `a_j`, `b_j` are the static search bounds of dimension `j`.
/// The result is clamped before return. At `k = 1` this is the classical
/// opposition point `a + b - X`.
pub fn lobl_reflect(position: &[f64], spec: &ObjectiveSpec, k: f64) -> Vec<f64> {
    assert!(k > 0.0, "lens scale k must be positive, got {k}");
    let mut reflected: Vec<f64> = position
        .iter()
        .zip(spec.lower())
        .zip(spec.upper())
        .map(|((&x, &lo), &hi)| {
            let sum = lo + hi;
            0.5 * sum + sum / (2.0 * k) - x / k
        })
        .collect();
    spec.clamp(&mut reflected);
    reflected
}

/// Evaluate every agent's reflection and keep it only on strict
/// improvement.
pub fn lobl_step(agents: &mut [Agent], k: f64, eval: &mut Evaluator) -> Result<()> {
    let spec = eval.spec();
    for agent in agents.iter_mut() {
        let reflected = lobl_reflect(&agent.position, spec, k);
        let fitness = eval.evaluate(&reflected)?;
        if fitness < agent.fitness {
            agent.position = reflected;
            agent.fitness = fitness;
        }
    }
    Ok(())
}

/// The improved optimizer. Both strategies can be toggled off for
/// ablation; with both off the iteration reduces to the plain GWO
/// baseline.
#[derive(Debug, Clone)]
pub struct Igwo {
    pub lobl: LoblConfig,
    pub use_acp: bool,
    pub use_lobl: bool,
}

impl Default for Igwo {
    fn default() -> Self {
        Igwo {
            lobl: LoblConfig::default(),
            use_acp: true,
            use_lobl: true,
        }
    }
}

impl Igwo {
    pub fn new(lobl: LoblConfig) -> Self {
        Igwo {
            lobl,
            ..Igwo::default()
        }
    }
}

impl SwarmOptimizer for Igwo {
    fn iterate(
        &mut self,
        population: &mut [Agent],
        t: usize,
        budget: usize,
        eval: &mut Evaluator,
        rng: &mut RngStream,
    ) -> Result<()> {
        let mut leaders = Leaders::select(population);
        if self.use_acp {
            acp_step(population, &leaders, t, budget, eval, rng)?;
            // The predation step may have improved some agents.
            leaders = Leaders::select(population);
        }
        let a = control_parameter(t, budget);
        gwo_exploitation_step(population, &leaders, a, eval, rng)?;
        if self.use_lobl {
            lobl_step(population, self.lobl.k(), eval)?;
        }
        Ok(())
    }
}
