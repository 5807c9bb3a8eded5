//! Glue from datasets to the optimizers: default bounds and one-call fits.

use crate::dataset::DefectDataset;
use crate::error::Result;
use crate::model::{sse_raw, FitResult, GoParams};
use crate::swarm::{optimize, AlgorithmKind, OptRun, SearchSpace};

/// Default fitting box: a in [y_n, 10 y_n] (at least as many defects as
/// observed, at most 10x), b in [1e-4, 1] per day.
pub fn default_bounds(d: &DefectDataset) -> ((f64, f64), (f64, f64)) {
    let yn = d.final_count() as f64;
    ((yn, 10.0 * yn), (1e-4, 1.0))
}

pub fn search_space(
    d: &DefectDataset,
    population: usize,
    iterations: usize,
) -> Result<SearchSpace> {
    let (a, b) = default_bounds(d);
    SearchSpace::new(vec![a.0, b.0], vec![a.1, b.1], population, iterations)
}

/// One optimizer run against the dataset's daily-timeline squared-error
/// objective.
pub fn fit(
    kind: AlgorithmKind,
    d: &DefectDataset,
    space: &SearchSpace,
    seed: u64,
) -> Result<(OptRun, FitResult)> {
    let s = d.daily_series();
    let run = optimize(kind, |p| sse_raw(p[0], p[1], &s.t, &s.y), space, seed)?;
    let params = GoParams::new(run.best.position[0], run.best.position[1])?;
    let result = FitResult {
        params,
        sse: run.best.value,
        source: kind.id().to_string(),
    };
    Ok((run, result))
}
