//! Seeded k-fold cross-validation over the daily timeline.
//!
//! Each fold trains on the remaining days' rows and is scored two ways:
//! raw SSE on its own training rows, and (since folds see different row
//! counts) that value rescaled by timeline/training size so folds and the
//! full-data fit are comparable. Testing SSE is evaluated over the FULL
//! timeline with the fold's parameters: held-out-only residuals would shrink
//! with k, while full-timeline testing measures how far a fold's parameters
//! sit from the all-data optimum.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dataset::DefectDataset;
use crate::error::{Error, Result};
use crate::model::{sse_raw, GoParams};
use crate::swarm::{optimize, AlgorithmKind, SearchSpace};

/// Deterministic fold assignment: a seeded shuffle of row indices dealt
/// round-robin, so fold sizes differ by at most one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoldPlan {
    pub k: usize,
    /// Fold index in [0, k) for each data row.
    pub assignment: Vec<usize>,
    pub seed: u64,
}

pub fn make_folds(n: usize, k: usize, seed: u64) -> Result<FoldPlan> {
    if k < 2 || k > n {
        return Err(Error::invalid(format!(
            "fold count must satisfy 2 <= k <= n, got k={k}, n={n}"
        )));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    perm.shuffle(&mut rng);
    let mut assignment = vec![0usize; n];
    for (i, &p) in perm.iter().enumerate() {
        assignment[p] = i % k;
    }
    Ok(FoldPlan { k, assignment, seed })
}

#[derive(Debug, Clone, Serialize)]
pub struct FoldResult {
    pub fold: usize,
    pub params: GoParams,
    /// SSE over this fold's training rows only.
    pub sse_training: f64,
    /// Training SSE rescaled by (timeline rows / training rows).
    pub sse_training_scaled: f64,
    /// SSE over the full timeline at this fold's parameters.
    pub sse_testing: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CvSummary {
    /// Mean of the scaled training SSEs.
    pub mean_sse_training: f64,
    pub mean_sse_testing: f64,
    /// Parameters of the fold with the median testing SSE.
    pub params: GoParams,
}

#[derive(Debug, Clone, Serialize)]
pub struct CvReport {
    pub algorithm: AlgorithmKind,
    pub k: usize,
    pub per_fold: Vec<FoldResult>,
    pub summary: CvSummary,
}

pub fn cross_validate(
    algorithm: AlgorithmKind,
    d: &DefectDataset,
    k: usize,
    space: &SearchSpace,
    seed: u64,
) -> Result<CvReport> {
    let s = d.daily_series();
    let n = s.len();
    let plan = make_folds(n, k, seed)?;
    let mut per_fold = Vec::with_capacity(k);
    for fold in 0..k {
        let mut tt = Vec::with_capacity(n);
        let mut ty = Vec::with_capacity(n);
        for i in 0..n {
            if plan.assignment[i] != fold {
                tt.push(s.t[i]);
                ty.push(s.y[i]);
            }
        }
        if tt.len() < 3 {
            return Err(Error::degenerate(format!(
                "fold {fold} leaves {} training rows, need at least 3",
                tt.len()
            )));
        }
        // Distinct sub-seed per fold; +1 keeps fold 0 off the caller's seed.
        let run = optimize(
            algorithm,
            |p| sse_raw(p[0], p[1], &tt, &ty),
            space,
            seed + fold as u64 + 1,
        )?;
        let params = GoParams::new(run.best.position[0], run.best.position[1])?;
        let sse_training = run.best.value;
        per_fold.push(FoldResult {
            fold,
            params,
            sse_training,
            sse_training_scaled: sse_training * n as f64 / tt.len() as f64,
            sse_testing: sse_raw(params.a, params.b, &s.t, &s.y),
        });
    }

    let mean_sse_training =
        per_fold.iter().map(|f| f.sse_training_scaled).sum::<f64>() / k as f64;
    let mean_sse_testing = per_fold.iter().map(|f| f.sse_testing).sum::<f64>() / k as f64;
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| per_fold[a].sse_testing.total_cmp(&per_fold[b].sse_testing));
    let median_fold = order[(k - 1) / 2];
    let summary = CvSummary {
        mean_sse_training,
        mean_sse_testing,
        params: per_fold[median_fold].params,
    };

    Ok(CvReport {
        algorithm,
        k,
        per_fold,
        summary,
    })
}
