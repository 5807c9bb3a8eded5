//! `trend`: emit both trend series and print the growth verdict.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use srgm_core::dataset::DefectDataset;
use srgm_core::trend::{trend_report, Trend, TrendReport, Verdict};

use crate::common::{ensure_dir, load_dataset, write_text};
use crate::config::RunConfig;
use crate::core_err;

pub fn verdict_str(v: &Verdict) -> String {
    match v.trend {
        Trend::Growth => match v.onset {
            Some(day) => format!("growth (onset day {day})"),
            None => "growth".to_string(),
        },
        Trend::Decay => "no-growth (decay)".to_string(),
        Trend::Mixed => "no-growth (mixed)".to_string(),
    }
}

/// Writes trend.csv. The Laplace column is empty on days where the factor is
/// undefined (zero cumulative count).
pub fn emit(cfg: &RunConfig, d: &DefectDataset) -> anyhow::Result<TrendReport> {
    let rep = trend_report(d).map_err(core_err)?;
    let lap: BTreeMap<usize, f64> = rep.laplace.values.iter().copied().collect();
    let avg: BTreeMap<usize, f64> = rep.arith_avg.values.iter().copied().collect();
    let mut csv = String::from("k,day,laplace,arith_avg\n");
    for &k in lap.keys().chain(avg.keys()).collect::<std::collections::BTreeSet<_>>() {
        let _ = write!(csv, "{k},{k},");
        if let Some(v) = lap.get(&k) {
            let _ = write!(csv, "{v:.6}");
        }
        csv.push(',');
        if let Some(v) = avg.get(&k) {
            let _ = write!(csv, "{v:.6}");
        }
        csv.push('\n');
    }
    write_text(&cfg.out_dir.join("trend.csv"), &csv)?;
    Ok(rep)
}

pub fn cmd_trend(cfg: &RunConfig) -> anyhow::Result<i32> {
    ensure_dir(&cfg.out_dir)?;
    let d = load_dataset(cfg)?;
    cfg.write_echo()?;
    let rep = emit(cfg, &d)?;
    println!(
        "dataset {}: {} observations over {} days, {} defects",
        d.name(),
        d.len(),
        d.daily_series().len(),
        d.final_count()
    );
    println!("laplace: {}", verdict_str(&rep.laplace.verdict));
    println!("arithmetic average: {}", verdict_str(&rep.arith_avg.verdict));
    println!("verdict: {}", verdict_str(&rep.laplace.verdict));
    Ok(if rep.laplace.verdict.trend == Trend::Growth {
        0
    } else {
        3
    })
}
