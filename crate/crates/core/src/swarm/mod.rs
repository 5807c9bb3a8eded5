//! Seven population-based optimizers behind one interface.
//!
//! All algorithms minimize a black-box objective over a box. They share the
//! same protocol: uniform seeded initialization, a fixed iteration budget,
//! per-generation best-so-far tracking, and positions kept inside the box.
//! Non-finite objective values count as +inf and can never become the best.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

mod abc;
mod fa;
mod gwo;
mod mfo;
mod pso;
mod sso;
mod woa;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgorithmKind {
    Fa,
    Sso,
    Abc,
    Gwo,
    Pso,
    Mfo,
    Woa,
}

impl AlgorithmKind {
    pub const ALL: [AlgorithmKind; 7] = [
        AlgorithmKind::Fa,
        AlgorithmKind::Sso,
        AlgorithmKind::Abc,
        AlgorithmKind::Gwo,
        AlgorithmKind::Pso,
        AlgorithmKind::Mfo,
        AlgorithmKind::Woa,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            AlgorithmKind::Fa => "fa",
            AlgorithmKind::Sso => "sso",
            AlgorithmKind::Abc => "abc",
            AlgorithmKind::Gwo => "gwo",
            AlgorithmKind::Pso => "pso",
            AlgorithmKind::Mfo => "mfo",
            AlgorithmKind::Woa => "woa",
        }
    }
}

impl fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for AlgorithmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = s.to_ascii_lowercase();
        Self::ALL
            .iter()
            .find(|k| k.id() == id)
            .copied()
            .ok_or_else(|| Error::NotFound {
                name: s.to_string(),
                valid: Self::ALL.map(|k| k.id()).join(", "),
            })
    }
}

/// Box bounds plus the shared run protocol (agent count, iteration budget).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchSpace {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub population: usize,
    pub iterations: usize,
}

impl SearchSpace {
    pub fn new(
        lower: Vec<f64>,
        upper: Vec<f64>,
        population: usize,
        iterations: usize,
    ) -> Result<Self> {
        let space = SearchSpace {
            lower,
            upper,
            population,
            iterations,
        };
        space.validate()?;
        Ok(space)
    }

    pub fn validate(&self) -> Result<()> {
        if self.lower.is_empty() || self.lower.len() != self.upper.len() {
            return Err(Error::invalid(format!(
                "bounds must be non-empty and of equal length (got {} and {})",
                self.lower.len(),
                self.upper.len()
            )));
        }
        for (d, (&lo, &hi)) in self.lower.iter().zip(&self.upper).enumerate() {
            if !lo.is_finite() || !hi.is_finite() || lo >= hi {
                return Err(Error::invalid(format!(
                    "dimension {d}: bounds must be finite with lower < upper, got [{lo}, {hi}]"
                )));
            }
        }
        if self.population < 4 {
            return Err(Error::invalid(format!(
                "population must be at least 4, got {}",
                self.population
            )));
        }
        if self.iterations < 1 {
            return Err(Error::invalid("iterations must be at least 1"));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }
}

/// Best point found so far: position and objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct BestPoint {
    pub position: Vec<f64>,
    pub value: f64,
}

/// Finished optimization run.
#[derive(Debug, Clone)]
pub struct OptRun {
    pub algorithm: AlgorithmKind,
    pub seed: u64,
    /// Best-so-far objective value after each generation (length =
    /// iterations, non-increasing).
    pub trajectory: Vec<f64>,
    pub best: BestPoint,
    pub evaluations: u64,
}

/// Uniform positions in the box; the exact population `optimize` starts from
/// for the same (space, seed).
pub fn init_population(space: &SearchSpace, seed: u64) -> Result<Vec<Vec<f64>>> {
    space.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(draw_population(space, &mut rng))
}

fn draw_population(space: &SearchSpace, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    (0..space.population)
        .map(|_| {
            space
                .lower
                .iter()
                .zip(&space.upper)
                .map(|(&lo, &hi)| lo + rng.gen::<f64>() * (hi - lo))
                .collect()
        })
        .collect()
}

pub(crate) enum Boundary {
    Clamp,
    /// One reflection off each violated face, then clamp.
    Reflect,
}

/// Shared per-run context: bounds, RNG, objective, best tracking.
pub(crate) struct Ctx<F> {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
    pub span: Vec<f64>,
    pub pop: usize,
    pub dim: usize,
    pub boundary: Boundary,
    obj: F,
    rng: ChaCha8Rng,
    pub evals: u64,
    pub best_x: Vec<f64>,
    pub best_f: f64,
}

impl<F: Fn(&[f64]) -> f64> Ctx<F> {
    pub fn evaluate(&mut self, x: &[f64]) -> f64 {
        self.evals += 1;
        let mut v = (self.obj)(x);
        if !v.is_finite() {
            v = f64::INFINITY;
        }
        if v < self.best_f || self.best_x.is_empty() {
            self.best_f = v;
            self.best_x = x.to_vec();
        }
        v
    }

    pub fn repair(&self, x: &mut [f64]) {
        for d in 0..self.dim {
            if let Boundary::Reflect = self.boundary {
                if x[d] < self.lo[d] {
                    x[d] = 2.0 * self.lo[d] - x[d];
                }
                if x[d] > self.hi[d] {
                    x[d] = 2.0 * self.hi[d] - x[d];
                }
            }
            x[d] = x[d].clamp(self.lo[d], self.hi[d]);
        }
    }

    pub fn rand(&mut self) -> f64 {
        self.rng.gen()
    }

    /// One uniform draw per dimension.
    pub fn rand_vec(&mut self) -> Vec<f64> {
        (0..self.dim).map(|_| self.rng.gen()).collect()
    }

    pub fn rand_index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn random_point(&mut self) -> Vec<f64> {
        (0..self.dim)
            .map(|d| self.lo[d] + self.rng.gen::<f64>() * self.span[d])
            .collect()
    }
}

pub(crate) fn argmin(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v < values[best] {
            best = i;
        }
    }
    best
}

pub(crate) fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > values[best] {
            best = i;
        }
    }
    best
}

enum AlgoState {
    Pso(pso::State),
    Gwo,
    Woa,
    Mfo(mfo::State),
    Abc(abc::State),
    Fa,
    Sso(sso::State),
}

/// Incremental runner: one `step` call advances every agent by one
/// generation. `optimize` drives this for the budget in the space.
pub struct Optimizer<F> {
    algorithm: AlgorithmKind,
    seed: u64,
    iterations: usize,
    it: usize,
    ctx: Ctx<F>,
    x: Vec<Vec<f64>>,
    f: Vec<f64>,
    state: AlgoState,
}

impl<F: Fn(&[f64]) -> f64> Optimizer<F> {
    pub fn new(algorithm: AlgorithmKind, objective: F, space: &SearchSpace, seed: u64) -> Result<Self> {
        space.validate()?;
        let boundary = match algorithm {
            AlgorithmKind::Mfo => Boundary::Reflect,
            _ => Boundary::Clamp,
        };
        let mut ctx = Ctx {
            lo: space.lower.clone(),
            hi: space.upper.clone(),
            span: space
                .lower
                .iter()
                .zip(&space.upper)
                .map(|(&lo, &hi)| hi - lo)
                .collect(),
            pop: space.population,
            dim: space.dim(),
            boundary,
            obj: objective,
            rng: ChaCha8Rng::seed_from_u64(seed),
            evals: 0,
            best_x: Vec::new(),
            best_f: f64::INFINITY,
        };
        let x = draw_population(space, &mut ctx.rng);
        let f: Vec<f64> = x.iter().map(|xi| ctx.evaluate(xi)).collect();
        let state = match algorithm {
            AlgorithmKind::Pso => AlgoState::Pso(pso::State::new(&x, &f)),
            AlgorithmKind::Gwo => AlgoState::Gwo,
            AlgorithmKind::Woa => AlgoState::Woa,
            AlgorithmKind::Mfo => AlgoState::Mfo(mfo::State::new()),
            AlgorithmKind::Abc => AlgoState::Abc(abc::State::new(&x, &f)),
            AlgorithmKind::Fa => AlgoState::Fa,
            AlgorithmKind::Sso => AlgoState::Sso(sso::State::new(&mut ctx)),
        };
        Ok(Optimizer {
            algorithm,
            seed,
            iterations: space.iterations,
            it: 0,
            ctx,
            x,
            f,
            state,
        })
    }

    /// One generation: every agent moves once (algorithm-specific), positions
    /// stay in the box, the best-so-far can only improve.
    pub fn step(&mut self) {
        let (it, iters) = (self.it, self.iterations);
        match &mut self.state {
            AlgoState::Pso(st) => pso::step(&mut self.ctx, &mut self.x, &mut self.f, it, iters, st),
            AlgoState::Gwo => gwo::step(&mut self.ctx, &mut self.x, &mut self.f, it, iters),
            AlgoState::Woa => woa::step(&mut self.ctx, &mut self.x, &mut self.f, it, iters),
            AlgoState::Mfo(st) => mfo::step(&mut self.ctx, &mut self.x, &mut self.f, it, iters, st),
            AlgoState::Abc(st) => abc::step(&mut self.ctx, &mut self.x, &mut self.f, st),
            AlgoState::Fa => fa::step(&mut self.ctx, &mut self.x, &mut self.f, it, iters),
            AlgoState::Sso(st) => sso::step(&mut self.ctx, &mut self.x, &mut self.f, it, iters, st),
        }
        self.it += 1;
    }

    pub fn best(&self) -> BestPoint {
        BestPoint {
            position: self.ctx.best_x.clone(),
            value: self.ctx.best_f,
        }
    }

    pub fn positions(&self) -> &[Vec<f64>] {
        &self.x
    }

    pub fn evaluations(&self) -> u64 {
        self.ctx.evals
    }

    pub fn iteration(&self) -> usize {
        self.it
    }

    pub fn algorithm(&self) -> AlgorithmKind {
        self.algorithm
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Full run at the space's budget; deterministic for a given
/// (algorithm, seed, space, objective).
pub fn optimize<F: Fn(&[f64]) -> f64>(
    algorithm: AlgorithmKind,
    objective: F,
    space: &SearchSpace,
    seed: u64,
) -> Result<OptRun> {
    let mut opt = Optimizer::new(algorithm, objective, space, seed)?;
    let mut trajectory = Vec::with_capacity(space.iterations);
    for _ in 0..space.iterations {
        opt.step();
        trajectory.push(opt.ctx.best_f);
    }
    Ok(OptRun {
        algorithm,
        seed,
        trajectory,
        best: opt.best(),
        evaluations: opt.ctx.evals,
    })
}
