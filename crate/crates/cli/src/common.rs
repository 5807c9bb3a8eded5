//! Shared plumbing: output directory handling, dataset loading, worker pool.

use std::fs;
use std::path::Path;

use srgm_core::dataset::DefectDataset;

use crate::config::RunConfig;
use crate::{core_err, exit_err};

pub fn ensure_dir(dir: &Path) -> anyhow::Result<()> {
    fs::create_dir_all(dir).map_err(|e| {
        exit_err(
            2,
            format!("cannot create output directory {}: {e}", dir.display()),
        )
    })
}

pub fn write_text(path: &Path, content: &str) -> anyhow::Result<()> {
    fs::write(path, content)
        .map_err(|e| exit_err(2, format!("cannot write {}: {e}", path.display())))
}

/// A dataset argument that exists on disk or looks like a path is a CSV file;
/// anything else is treated as a builtin id.
pub fn load_dataset(cfg: &RunConfig) -> anyhow::Result<DefectDataset> {
    let p = Path::new(&cfg.dataset);
    let pathlike = p.exists()
        || cfg.dataset.ends_with(".csv")
        || cfg.dataset.contains(std::path::MAIN_SEPARATOR);
    if pathlike {
        DefectDataset::load_csv(p).map_err(core_err)
    } else {
        DefectDataset::builtin(&cfg.dataset).map_err(core_err)
    }
}

pub fn pool(jobs: Option<usize>) -> anyhow::Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| exit_err(2, format!("cannot build worker pool: {e}")))
}
