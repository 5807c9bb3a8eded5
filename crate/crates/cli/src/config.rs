//! Run configuration: flag > config file > SRGM_SEED env > default.

use std::env;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use srgm_core::dataset::DefectDataset;
use srgm_core::fit::default_bounds;
use srgm_core::swarm::AlgorithmKind;

use crate::common::write_text;
use crate::{usage, CommonArgs, ReproduceArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Oracle,
    Swarm(AlgorithmKind),
}

impl Algo {
    pub fn id(&self) -> &'static str {
        match self {
            Algo::Oracle => "oracle",
            Algo::Swarm(k) => k.id(),
        }
    }

    fn parse(s: &str) -> anyhow::Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if t == "oracle" {
            return Ok(Algo::Oracle);
        }
        AlgorithmKind::from_str(&t).map(Algo::Swarm).map_err(|_| {
            usage(format!(
                "unknown algorithm '{s}' (valid: abc, fa, gwo, mfo, pso, sso, woa, oracle)"
            ))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bounds {
    Auto,
    Explicit {
        a_lo: f64,
        a_hi: f64,
        b_lo: f64,
        b_hi: f64,
    },
}

impl Bounds {
    pub fn resolve(&self, d: &DefectDataset) -> ((f64, f64), (f64, f64)) {
        match *self {
            Bounds::Auto => default_bounds(d),
            Bounds::Explicit {
                a_lo,
                a_hi,
                b_lo,
                b_hi,
            } => ((a_lo, a_hi), (b_lo, b_hi)),
        }
    }

    pub fn echo(&self) -> String {
        match *self {
            Bounds::Auto => "auto".to_string(),
            Bounds::Explicit {
                a_lo,
                a_hi,
                b_lo,
                b_hi,
            } => format!("{a_lo},{a_hi},{b_lo},{b_hi}"),
        }
    }

    fn parse(s: &str) -> anyhow::Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("auto") {
            return Ok(Bounds::Auto);
        }
        let parts: Vec<&str> = t.split(',').collect();
        if parts.len() != 4 {
            return Err(usage(format!(
                "bounds must be 'a_lo,a_hi,b_lo,b_hi' or 'auto', got '{s}'"
            )));
        }
        let mut v = [0.0f64; 4];
        for (slot, p) in v.iter_mut().zip(&parts) {
            *slot = p
                .trim()
                .parse()
                .map_err(|_| usage(format!("bounds component '{p}' is not a number")))?;
        }
        let [a_lo, a_hi, b_lo, b_hi] = v;
        let ordered =
            v.iter().all(|x| x.is_finite()) && a_lo > 0.0 && a_lo < a_hi && b_lo > 0.0 && b_lo < b_hi;
        if !ordered {
            return Err(usage(
                "bounds must be finite, positive, and ordered (a_lo < a_hi, b_lo < b_hi)",
            ));
        }
        Ok(Bounds::Explicit {
            a_lo,
            a_hi,
            b_lo,
            b_hi,
        })
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub dataset: String,
    /// Deduplicated, sorted by id; non-empty.
    pub algorithms: Vec<Algo>,
    pub population: usize,
    pub iterations: usize,
    pub bounds: Bounds,
    /// Sorted ascending, deduplicated; non-empty.
    pub seeds: Vec<u64>,
    /// Fold counts in emission order; each at least 2.
    pub k: Vec<usize>,
    pub out_dir: PathBuf,
    pub jobs: Option<usize>,
}

impl RunConfig {
    pub fn resolve(args: &CommonArgs) -> anyhow::Result<Self> {
        let file = match &args.config {
            Some(p) => FileValues::load(p)?,
            None => FileValues::default(),
        };
        let dataset = args
            .dataset
            .clone()
            .or(file.dataset)
            .ok_or_else(|| usage("--dataset is required (builtin id or CSV path)"))?;
        let algorithms = resolve_algos(&args.algo, file.algorithms.as_deref())?;
        let population = args.pop.or(file.population).unwrap_or(50);
        let iterations = args.iters.or(file.iterations).unwrap_or(100);
        if population == 0 || iterations == 0 {
            return Err(usage("population and iterations must be positive"));
        }
        let bounds = match (&args.bounds, &file.bounds) {
            (Some(s), _) | (None, Some(s)) => Bounds::parse(s)?,
            (None, None) => Bounds::Auto,
        };
        let seeds = resolve_seeds(
            args.seed,
            args.seeds.as_deref(),
            file.seeds.as_deref(),
            || vec![42],
        )?;
        let k = resolve_k(&args.k, file.k.as_deref())?;
        let out_dir = args
            .out
            .clone()
            .or(file.out_dir)
            .unwrap_or_else(|| PathBuf::from("."));
        let jobs = args.jobs.or(file.jobs);
        if jobs == Some(0) {
            return Err(usage("--jobs must be positive"));
        }
        Ok(RunConfig {
            dataset,
            algorithms,
            population,
            iterations,
            bounds,
            seeds,
            k,
            out_dir,
            jobs,
        })
    }

    /// Base configuration for `reproduce`: all algorithms, k = {10, 2},
    /// auto bounds, fit seeds defaulting to 1..=20. The dataset field is
    /// filled per builtin dataset by the caller.
    pub fn resolve_reproduce(args: &ReproduceArgs) -> anyhow::Result<Self> {
        let file = match &args.config {
            Some(p) => FileValues::load(p)?,
            None => FileValues::default(),
        };
        let population = args.pop.or(file.population).unwrap_or(50);
        let iterations = args.iters.or(file.iterations).unwrap_or(100);
        if population == 0 || iterations == 0 {
            return Err(usage("population and iterations must be positive"));
        }
        let seeds = resolve_seeds(
            args.seed,
            args.seeds.as_deref(),
            file.seeds.as_deref(),
            || (1..=20).collect(),
        )?;
        let out_dir = args
            .out
            .clone()
            .or(file.out_dir)
            .unwrap_or_else(|| PathBuf::from("."));
        let jobs = args.jobs.or(file.jobs);
        if jobs == Some(0) {
            return Err(usage("--jobs must be positive"));
        }
        Ok(RunConfig {
            dataset: String::new(),
            algorithms: all_algos(),
            population,
            iterations,
            bounds: Bounds::Auto,
            seeds,
            k: vec![10, 2],
            out_dir,
            jobs,
        })
    }

    pub fn swarm_algos(&self) -> Vec<AlgorithmKind> {
        self.algorithms
            .iter()
            .filter_map(|a| match a {
                Algo::Swarm(k) => Some(*k),
                Algo::Oracle => None,
            })
            .collect()
    }

    /// key=value rendering, loadable again via --config.
    pub fn echo(&self) -> String {
        let mut s = String::from("# resolved run configuration; reusable via --config\n");
        let _ = writeln!(s, "dataset={}", self.dataset);
        let ids: Vec<&str> = self.algorithms.iter().map(|a| a.id()).collect();
        let _ = writeln!(s, "algorithms={}", ids.join(","));
        let _ = writeln!(s, "population={}", self.population);
        let _ = writeln!(s, "iterations={}", self.iterations);
        let _ = writeln!(s, "bounds={}", self.bounds.echo());
        let _ = writeln!(s, "seeds={}", echo_seeds(&self.seeds));
        let ks: Vec<String> = self.k.iter().map(|k| k.to_string()).collect();
        let _ = writeln!(s, "k={}", ks.join(","));
        let _ = writeln!(s, "out_dir={}", self.out_dir.display());
        if let Some(j) = self.jobs {
            let _ = writeln!(s, "jobs={j}");
        }
        s
    }

    pub fn write_echo(&self) -> anyhow::Result<()> {
        write_text(&self.out_dir.join("run_config.txt"), &self.echo())
    }
}

pub fn all_algos() -> Vec<Algo> {
    let mut all: Vec<Algo> = AlgorithmKind::ALL.iter().map(|&k| Algo::Swarm(k)).collect();
    all.push(Algo::Oracle);
    all.sort_by_key(|a| a.id());
    all
}

fn resolve_algos(flags: &[String], file: Option<&[String]>) -> anyhow::Result<Vec<Algo>> {
    let chosen: Vec<String> = if !flags.is_empty() {
        flags.to_vec()
    } else if let Some(f) = file {
        f.to_vec()
    } else {
        return Ok(all_algos());
    };
    let mut out: Vec<Algo> = Vec::new();
    for s in &chosen {
        let a = Algo::parse(s)?;
        if !out.contains(&a) {
            out.push(a);
        }
    }
    if out.is_empty() {
        return Err(usage("algorithm set must be non-empty"));
    }
    out.sort_by_key(|a| a.id());
    Ok(out)
}

fn resolve_seeds(
    flag_seed: Option<u64>,
    flag_seeds: Option<&str>,
    file_seeds: Option<&str>,
    default: impl FnOnce() -> Vec<u64>,
) -> anyhow::Result<Vec<u64>> {
    if let Some(s) = flag_seed {
        return Ok(vec![s]);
    }
    if let Some(s) = flag_seeds {
        return parse_seed_list(s);
    }
    if let Some(s) = file_seeds {
        return parse_seed_list(s);
    }
    if let Ok(v) = env::var("SRGM_SEED") {
        let s = v
            .trim()
            .parse()
            .map_err(|_| usage(format!("SRGM_SEED must be an unsigned integer, got '{v}'")))?;
        return Ok(vec![s]);
    }
    Ok(default())
}

/// `lo..hi` (inclusive, `lo..=hi` also accepted) or comma-separated values.
pub fn parse_seed_list(s: &str) -> anyhow::Result<Vec<u64>> {
    let t = s.trim();
    let mut seeds: Vec<u64> = if let Some((lo, hi)) = t.split_once("..") {
        let hi = hi.trim().strip_prefix('=').unwrap_or(hi.trim());
        let lo: u64 = lo
            .trim()
            .parse()
            .map_err(|_| usage(format!("seed range start '{lo}' is not an unsigned integer")))?;
        let hi: u64 = hi
            .parse()
            .map_err(|_| usage(format!("seed range end '{hi}' is not an unsigned integer")))?;
        if lo > hi {
            return Err(usage(format!("seed range {lo}..{hi} is empty")));
        }
        if hi - lo >= 10_000 {
            return Err(usage("seed range covers more than 10000 seeds"));
        }
        (lo..=hi).collect()
    } else {
        t.split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| usage(format!("seed '{p}' is not an unsigned integer")))
            })
            .collect::<anyhow::Result<_>>()?
    };
    seeds.sort_unstable();
    seeds.dedup();
    if seeds.is_empty() {
        return Err(usage("seed list is empty"));
    }
    Ok(seeds)
}

fn resolve_k(flags: &[usize], file: Option<&[usize]>) -> anyhow::Result<Vec<usize>> {
    let mut ks: Vec<usize> = if !flags.is_empty() {
        flags.to_vec()
    } else if let Some(f) = file {
        f.to_vec()
    } else {
        vec![10, 2]
    };
    for &k in &ks {
        if k < 2 {
            return Err(usage(format!("fold count must be at least 2, got {k}")));
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    ks.retain(|&k| seen.insert(k));
    Ok(ks)
}

pub fn echo_seeds(seeds: &[u64]) -> String {
    let contiguous = seeds.len() > 2 && seeds.windows(2).all(|w| w[1] == w[0] + 1);
    if contiguous {
        format!("{}..{}", seeds[0], seeds.last().unwrap())
    } else {
        seeds
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Default)]
struct FileValues {
    dataset: Option<String>,
    algorithms: Option<Vec<String>>,
    population: Option<usize>,
    iterations: Option<usize>,
    bounds: Option<String>,
    seeds: Option<String>,
    k: Option<Vec<usize>>,
    out_dir: Option<PathBuf>,
    jobs: Option<usize>,
}

impl FileValues {
    fn load(path: &Path) -> anyhow::Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
        let mut v = FileValues::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, val) = line.split_once('=').ok_or_else(|| {
                usage(format!(
                    "{}:{}: expected key=value",
                    path.display(),
                    idx + 1
                ))
            })?;
            let (key, val) = (key.trim(), val.trim().to_string());
            match key {
                "dataset" => v.dataset = Some(val),
                "algorithms" => {
                    v.algorithms = Some(val.split(',').map(|s| s.trim().to_string()).collect())
                }
                "population" => v.population = Some(parse_count(path, idx, key, &val)?),
                "iterations" => v.iterations = Some(parse_count(path, idx, key, &val)?),
                "bounds" => v.bounds = Some(val),
                "seeds" => v.seeds = Some(val),
                "k" => {
                    v.k = Some(
                        val.split(',')
                            .map(|p| parse_count(path, idx, "k", p.trim()))
                            .collect::<anyhow::Result<_>>()?,
                    )
                }
                "out_dir" => v.out_dir = Some(PathBuf::from(val)),
                "jobs" => v.jobs = Some(parse_count(path, idx, key, &val)?),
                other => {
                    return Err(usage(format!(
                        "{}:{}: unknown config key '{other}'",
                        path.display(),
                        idx + 1
                    )))
                }
            }
        }
        Ok(v)
    }
}

fn parse_count(path: &Path, idx: usize, key: &str, val: &str) -> anyhow::Result<usize> {
    val.parse().map_err(|_| {
        usage(format!(
            "{}:{}: {key} must be an unsigned integer, got '{val}'",
            path.display(),
            idx + 1
        ))
    })
}
