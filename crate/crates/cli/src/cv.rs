//! `cv`: k-fold cross-validation per algorithm, one CSV row and one JSON
//! report per fold count.

use std::fmt::Write as _;

use rayon::prelude::*;
use srgm_core::dataset::DefectDataset;
use srgm_core::swarm::AlgorithmKind;
use srgm_core::validation::{cross_validate, CvReport};

use crate::common::{ensure_dir, load_dataset, pool, write_text};
use crate::config::RunConfig;
use crate::{core_err, exit_err, usage};

/// Runs every (fold count, algorithm) pair at one seed and writes
/// cv_k<k>.csv / cv_k<k>.json; reports come back grouped in cfg.k order,
/// sorted by algorithm id within each group.
pub fn emit(
    cfg: &RunConfig,
    d: &DefectDataset,
    seed: u64,
) -> anyhow::Result<Vec<(usize, Vec<CvReport>)>> {
    let mut algos = cfg.swarm_algos();
    if algos.is_empty() {
        return Err(usage(
            "cross-validation needs at least one swarm algorithm (the oracle is fit-only)",
        ));
    }
    algos.sort_by_key(|a| a.id());
    let space = crate::fit::space_for(cfg, d)?;
    let tasks: Vec<(usize, AlgorithmKind)> = cfg
        .k
        .iter()
        .flat_map(|&k| algos.iter().map(move |&a| (k, a)))
        .collect();
    let done: Vec<anyhow::Result<CvReport>> = pool(cfg.jobs)?.install(|| {
        tasks
            .par_iter()
            .map(|&(k, a)| cross_validate(a, d, k, &space, seed).map_err(core_err))
            .collect()
    });
    let mut flat = Vec::with_capacity(done.len());
    for r in done {
        flat.push(r?);
    }

    let mut grouped = Vec::with_capacity(cfg.k.len());
    for &k in &cfg.k {
        let mut group: Vec<CvReport> = flat.iter().filter(|r| r.k == k).cloned().collect();
        group.sort_by_key(|r| r.algorithm.id());

        let mut csv = String::from("algo,k,mean_sse_training,mean_sse_testing,a,b\n");
        for r in &group {
            let _ = writeln!(
                csv,
                "{},{},{:.8},{:.8},{:.8},{:.8}",
                r.algorithm.id(),
                r.k,
                r.summary.mean_sse_training,
                r.summary.mean_sse_testing,
                r.summary.params.a,
                r.summary.params.b
            );
        }
        write_text(&cfg.out_dir.join(format!("cv_k{k}.csv")), &csv)?;

        let json = serde_json::to_string_pretty(&group)
            .map_err(|e| exit_err(4, format!("cannot serialize cv report: {e}")))?;
        write_text(&cfg.out_dir.join(format!("cv_k{k}.json")), &(json + "\n"))?;

        grouped.push((k, group));
    }
    Ok(grouped)
}

pub fn cmd_cv(cfg: &RunConfig) -> anyhow::Result<i32> {
    ensure_dir(&cfg.out_dir)?;
    let d = load_dataset(cfg)?;
    cfg.write_echo()?;
    let seed = cfg.seeds[0];
    let grouped = emit(cfg, &d, seed)?;
    println!(
        "dataset {}: cross-validation at seed {seed} over {} timeline days",
        d.name(),
        d.daily_series().len()
    );
    for (k, group) in &grouped {
        for r in group {
            println!(
                "k={k} {}: training {:.8} testing {:.8} (a={:.8}, b={:.8})",
                r.algorithm.id(),
                r.summary.mean_sse_training,
                r.summary.mean_sse_testing,
                r.summary.params.a,
                r.summary.params.b
            );
        }
    }
    let names: Vec<String> = cfg
        .k
        .iter()
        .map(|k| format!("cv_k{k}.csv, cv_k{k}.json"))
        .collect();
    println!("wrote {} in {}", names.join(", "), cfg.out_dir.display());
    Ok(0)
}
