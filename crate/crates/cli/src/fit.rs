//! `fit`: one optimizer run per (algorithm, seed) plus the deterministic
//! grid-search oracle; emits fit.csv, per-run convergence series, and
//! fitted-vs-actual curves (cumulative and per-interval) for the best seed
//! of each algorithm.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use srgm_core::baseline::oracle_fit;
use srgm_core::dataset::DefectDataset;
use srgm_core::fit::fit;
use srgm_core::model::GoParams;
use srgm_core::swarm::{AlgorithmKind, SearchSpace};

use crate::common::{ensure_dir, load_dataset, pool, write_text};
use crate::config::{Algo, RunConfig};
use crate::{core_err, exit_err};

/// Grid resolution and refinement passes of the reference fit.
pub const ORACLE_GRID: usize = 1000;
pub const ORACLE_REFINEMENTS: usize = 4;

pub struct SwarmRow {
    pub algo: AlgorithmKind,
    pub seed: u64,
    pub a: f64,
    pub b: f64,
    pub sse: f64,
    pub evaluations: u64,
    pub trajectory: Vec<f64>,
}

pub struct OracleRow {
    pub a: f64,
    pub b: f64,
    pub sse: f64,
    pub evaluations: u64,
}

pub struct FitOutputs {
    pub oracle: OracleRow,
    /// Sorted by (algorithm id, seed).
    pub rows: Vec<SwarmRow>,
    /// Index into rows of each algorithm's best seed (ties to the smaller seed).
    pub best: BTreeMap<&'static str, usize>,
}

pub fn space_for(cfg: &RunConfig, d: &DefectDataset) -> anyhow::Result<SearchSpace> {
    let ((a_lo, a_hi), (b_lo, b_hi)) = cfg.bounds.resolve(d);
    SearchSpace::new(
        vec![a_lo, b_lo],
        vec![a_hi, b_hi],
        cfg.population,
        cfg.iterations,
    )
    .map_err(core_err)
}

pub fn run_matrix(cfg: &RunConfig, d: &DefectDataset) -> anyhow::Result<Vec<SwarmRow>> {
    let space = space_for(cfg, d)?;
    let mut tasks: Vec<(AlgorithmKind, u64)> = Vec::new();
    for kind in cfg.swarm_algos() {
        for &seed in &cfg.seeds {
            tasks.push((kind, seed));
        }
    }
    let done: Vec<anyhow::Result<SwarmRow>> = pool(cfg.jobs)?.install(|| {
        tasks
            .par_iter()
            .map(|&(kind, seed)| {
                let (run, res) = fit(kind, d, &space, seed).map_err(|e| {
                    exit_err(4, format!("optimizer failure in {} seed {seed}: {e}", kind.id()))
                })?;
                Ok(SwarmRow {
                    algo: kind,
                    seed,
                    a: res.params.a,
                    b: res.params.b,
                    sse: res.sse,
                    evaluations: run.evaluations,
                    trajectory: run.trajectory,
                })
            })
            .collect()
    });
    let mut rows = Vec::with_capacity(done.len());
    for r in done {
        rows.push(r?);
    }
    rows.sort_by(|x, y| x.algo.id().cmp(y.algo.id()).then(x.seed.cmp(&y.seed)));
    Ok(rows)
}

pub fn run_oracle(cfg: &RunConfig, d: &DefectDataset) -> anyhow::Result<OracleRow> {
    let (_, (b_lo, b_hi)) = cfg.bounds.resolve(d);
    let r = oracle_fit(d, b_lo, b_hi, ORACLE_GRID, ORACLE_REFINEMENTS).map_err(core_err)?;
    Ok(OracleRow {
        a: r.params.a,
        b: r.params.b,
        sse: r.sse,
        evaluations: (ORACLE_GRID * (ORACLE_REFINEMENTS + 1)) as u64,
    })
}

/// Runs the matrix and the oracle and writes every fit artifact.
pub fn emit(cfg: &RunConfig, d: &DefectDataset) -> anyhow::Result<FitOutputs> {
    let rows = run_matrix(cfg, d)?;
    let oracle = run_oracle(cfg, d)?;

    let mut csv = String::from("algo,seed,a,b,sse,evaluations\n");
    let _ = writeln!(
        csv,
        "oracle,0,{:.8},{:.8},{:.8},{}",
        oracle.a, oracle.b, oracle.sse, oracle.evaluations
    );
    for r in &rows {
        let _ = writeln!(
            csv,
            "{},{},{:.8},{:.8},{:.8},{}",
            r.algo.id(),
            r.seed,
            r.a,
            r.b,
            r.sse,
            r.evaluations
        );
    }
    write_text(&cfg.out_dir.join("fit.csv"), &csv)?;

    for r in &rows {
        let mut c = String::from("iteration,best_sse\n");
        for (i, v) in r.trajectory.iter().enumerate() {
            let _ = writeln!(c, "{},{v:.8}", i + 1);
        }
        write_text(
            &cfg.out_dir
                .join(format!("convergence_{}_{}.csv", r.algo.id(), r.seed)),
            &c,
        )?;
    }

    let mut best: BTreeMap<&'static str, usize> = BTreeMap::new();
    for (i, r) in rows.iter().enumerate() {
        match best.get(r.algo.id()) {
            Some(&j) if rows[j].sse <= r.sse => {}
            _ => {
                best.insert(r.algo.id(), i);
            }
        }
    }

    for algo in &cfg.algorithms {
        let (a, b) = match algo {
            Algo::Oracle => (oracle.a, oracle.b),
            Algo::Swarm(k) => {
                let i = best[k.id()];
                (rows[i].a, rows[i].b)
            }
        };
        let p = GoParams::new(a, b).map_err(core_err)?;
        write_fitted(cfg, d, algo.id(), &p)?;
    }

    Ok(FitOutputs { oracle, rows, best })
}

/// Fitted-vs-actual series at the listed observation times: cumulative and
/// per-interval (first differences, with an implicit zero at t = 0).
fn write_fitted(
    cfg: &RunConfig,
    d: &DefectDataset,
    id: &str,
    p: &GoParams,
) -> anyhow::Result<()> {
    let mut cum = String::from("t,y_actual,y_fitted,residual\n");
    let mut non = cum.clone();
    let (mut prev_t, mut prev_y) = (0.0f64, 0u64);
    for &(t, y) in d.points() {
        let m = p.mvf(t);
        let _ = writeln!(cum, "{t},{y},{m:.8},{:.8}", y as f64 - m);
        let dm = m - p.mvf(prev_t);
        let dy = y - prev_y;
        let _ = writeln!(non, "{t},{dy},{dm:.8},{:.8}", dy as f64 - dm);
        (prev_t, prev_y) = (t, y);
    }
    write_text(&cfg.out_dir.join(format!("fitted_{id}.csv")), &cum)?;
    write_text(&cfg.out_dir.join(format!("fitted_noncum_{id}.csv")), &non)
}

pub fn cmd_fit(cfg: &RunConfig) -> anyhow::Result<i32> {
    ensure_dir(&cfg.out_dir)?;
    let d = load_dataset(cfg)?;
    cfg.write_echo()?;
    let outs = emit(cfg, &d)?;
    println!(
        "dataset {}: {} observations over {} days, {} defects",
        d.name(),
        d.len(),
        d.daily_series().len(),
        d.final_count()
    );
    println!(
        "oracle: a={:.8} b={:.8} sse={:.8} ({} evaluations)",
        outs.oracle.a, outs.oracle.b, outs.oracle.sse, outs.oracle.evaluations
    );
    for (id, &i) in &outs.best {
        let r = &outs.rows[i];
        println!(
            "{id} best (seed {}): a={:.8} b={:.8} sse={:.8}",
            r.seed, r.a, r.b, r.sse
        );
    }
    println!(
        "wrote fit.csv, {} convergence series, {} fitted series in {}",
        outs.rows.len(),
        2 * cfg.algorithms.len(),
        cfg.out_dir.display()
    );
    Ok(0)
}
