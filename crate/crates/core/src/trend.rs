//! Laplace and arithmetic-average trend tests.
//!
//! Both statistics are evaluated over the per-day new-defect counts of the
//! dataset's daily timeline. Negative Laplace values signal reliability
//! growth; for the arithmetic average, growth shows as values decreasing
//! after an early peak.

use crate::dataset::DefectDataset;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Laplace,
    ArithmeticAverage,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Growth,
    Decay,
    Mixed,
}

/// Trend call for one statistic; `onset` is the first day index from which
/// the growth condition holds through the end (growth verdicts only).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub trend: Trend,
    pub onset: Option<usize>,
}

/// One statistic evaluated at every day index where it is defined.
#[derive(Debug, Clone)]
pub struct TrendSeries {
    pub statistic: Statistic,
    /// (day index k, statistic value), k strictly increasing from the
    /// smallest index where the statistic is defined (at least 2).
    pub values: Vec<(usize, f64)>,
    pub verdict: Verdict,
}

/// Laplace factor over the first `k` elements of `series` (1-based index
/// convention): `[sum (i-1) s_i - (k-1)/2 sum s_i] / sqrt((k^2-1)/12 sum s_i)`.
/// Negative values indicate reliability growth at `k`.
pub fn laplace_factor(series: &[f64], k: usize) -> Result<f64> {
    if k < 2 || k > series.len() {
        return Err(Error::invalid(format!(
            "laplace index k={k} outside 2..={}",
            series.len()
        )));
    }
    let s = &series[..k];
    let total: f64 = s.iter().sum();
    if total <= 0.0 {
        return Err(Error::degenerate(format!(
            "laplace factor needs positive total over the first {k} elements"
        )));
    }
    let kf = k as f64;
    let weighted: f64 = s.iter().enumerate().map(|(i, &v)| i as f64 * v).sum();
    let num = weighted - (kf - 1.0) / 2.0 * total;
    let den = ((kf * kf - 1.0) / 12.0 * total).sqrt();
    Ok(num / den)
}

/// Mean of the first `k` elements.
pub fn arithmetic_average(series: &[f64], k: usize) -> Result<f64> {
    if k < 1 || k > series.len() {
        return Err(Error::invalid(format!(
            "average index k={k} outside 1..={}",
            series.len()
        )));
    }
    Ok(series[..k].iter().sum::<f64>() / k as f64)
}

/// Both trend series for a dataset, with verdicts.
#[derive(Debug, Clone)]
pub struct TrendReport {
    pub laplace: TrendSeries,
    pub arith_avg: TrendSeries,
}

pub fn trend_report(d: &DefectDataset) -> Result<TrendReport> {
    let counts = d.daily_series().new_counts();
    let n = counts.len();
    if n < 2 {
        return Err(Error::degenerate(
            "trend tests need a timeline of at least 2 days",
        ));
    }

    // The Laplace factor is undefined while the cumulative count is zero;
    // start at the first index with a positive prefix sum.
    let mut prefix = 0.0;
    let mut first_pos = n + 1;
    for (i, &c) in counts.iter().enumerate() {
        prefix += c;
        if prefix > 0.0 {
            first_pos = i + 1;
            break;
        }
    }
    if first_pos > n {
        return Err(Error::degenerate("dataset has no defects"));
    }
    let lap_start = first_pos.max(2);
    let mut lap_values = Vec::with_capacity(n + 1 - lap_start);
    for k in lap_start..=n {
        lap_values.push((k, laplace_factor(&counts, k)?));
    }

    let mut avg_values = Vec::with_capacity(n - 1);
    for k in 2..=n {
        avg_values.push((k, arithmetic_average(&counts, k)?));
    }

    Ok(TrendReport {
        laplace: TrendSeries {
            statistic: Statistic::Laplace,
            verdict: laplace_verdict(&lap_values),
            values: lap_values,
        },
        arith_avg: TrendSeries {
            statistic: Statistic::ArithmeticAverage,
            verdict: average_verdict(&avg_values),
            values: avg_values,
        },
    })
}

/// Growth iff the factor is non-positive from some index through the end;
/// onset is the first such index.
fn laplace_verdict(values: &[(usize, f64)]) -> Verdict {
    let last_positive = values.iter().rev().find(|&&(_, v)| v > 0.0);
    match last_positive {
        None => Verdict {
            trend: Trend::Growth,
            onset: Some(values[0].0),
        },
        Some(&(k_pos, _)) if k_pos < values.last().unwrap().0 => Verdict {
            trend: Trend::Growth,
            onset: Some(k_pos + 1),
        },
        _ => {
            if values.iter().all(|&(_, v)| v >= 0.0) {
                Verdict {
                    trend: Trend::Decay,
                    onset: None,
                }
            } else {
                Verdict {
                    trend: Trend::Mixed,
                    onset: None,
                }
            }
        }
    }
}

/// Growth iff the running average peaks strictly before the end and finishes
/// below the peak; onset is the day after the peak.
fn average_verdict(values: &[(usize, f64)]) -> Verdict {
    let (peak_k, peak_v) = values
        .iter()
        .fold(values[0], |acc, &e| if e.1 > acc.1 { e } else { acc });
    let &(last_k, last_v) = values.last().unwrap();
    if peak_k < last_k && last_v < peak_v {
        Verdict {
            trend: Trend::Growth,
            onset: Some(peak_k + 1),
        }
    } else if peak_k == last_k {
        Verdict {
            trend: Trend::Decay,
            onset: None,
        }
    } else {
        Verdict {
            trend: Trend::Mixed,
            onset: None,
        }
    }
}
