//! Cumulative defect-count datasets and their timeline expansions.

use std::path::Path;

use crate::error::{Error, Result};

/// Defect counts for Apache 2.0.36: (day, cumulative defects debugged).
const APACHE_2_0_36: &[(u32, u32)] = &[
    (1, 2),
    (2, 7),
    (3, 8),
    (4, 9),
    (5, 10),
    (7, 12),
    (8, 13),
    (9, 14),
    (10, 17),
    (12, 19),
    (13, 20),
    (15, 22),
    (17, 23),
    (18, 25),
    (21, 26),
    (25, 27),
    (27, 28),
    (29, 30),
    (30, 32),
    (31, 35),
    (32, 36),
    (33, 39),
    (34, 40),
    (35, 43),
    (38, 46),
    (40, 47),
    (43, 48),
    (44, 49),
    (103, 50),
];

/// Defect counts for Apache 2.0.39.
const APACHE_2_0_39: &[(u32, u32)] = &[
    (1, 1),
    (2, 3),
    (3, 5),
    (4, 8),
    (5, 11),
    (7, 13),
    (8, 14),
    (9, 15),
    (10, 16),
    (11, 17),
    (15, 20),
    (16, 22),
    (17, 25),
    (18, 26),
    (19, 27),
    (22, 30),
    (23, 31),
    (24, 32),
    (25, 34),
    (26, 35),
    (28, 36),
    (29, 37),
    (30, 39),
    (31, 40),
    (32, 41),
    (35, 44),
    (38, 45),
    (39, 46),
    (42, 47),
    (43, 48),
    (49, 51),
    (50, 52),
    (51, 53),
    (57, 54),
    (66, 55),
    (70, 56),
    (81, 57),
    (164, 58),
];

pub const BUILTIN_IDS: &[&str] = &["apache-2.0.36", "apache-2.0.39"];

/// Ordered (time, cumulative defect count) observations for one release.
///
/// Invariants, enforced at construction: times strictly increasing and
/// positive, counts non-decreasing, at least 3 points.
#[derive(Debug, Clone, PartialEq)]
pub struct DefectDataset {
    name: String,
    points: Vec<(f64, u64)>,
}

impl DefectDataset {
    pub fn new(name: impl Into<String>, points: Vec<(f64, u64)>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::invalid(format!(
                "dataset needs at least 3 points, got {}",
                points.len()
            )));
        }
        for (i, &(t, y)) in points.iter().enumerate() {
            if !t.is_finite() || t <= 0.0 {
                return Err(Error::invalid(format!(
                    "row {}: times must be positive, got t={t}",
                    i + 1
                )));
            }
            if i > 0 {
                let (tp, yp) = points[i - 1];
                if t <= tp {
                    return Err(Error::invalid(format!(
                        "row {}: times strictly increasing violated (t={t} after t={tp})",
                        i + 1
                    )));
                }
                if y < yp {
                    return Err(Error::invalid(format!(
                        "row {}: counts non-decreasing violated (y={y} after y={yp})",
                        i + 1
                    )));
                }
            }
        }
        Ok(DefectDataset {
            name: name.into(),
            points,
        })
    }

    /// One of the two embedded release datasets.
    pub fn builtin(name: &str) -> Result<Self> {
        let raw = match name {
            "apache-2.0.36" => APACHE_2_0_36,
            "apache-2.0.39" => APACHE_2_0_39,
            _ => {
                return Err(Error::NotFound {
                    name: name.to_string(),
                    valid: BUILTIN_IDS.join(", "),
                })
            }
        };
        let points = raw.iter().map(|&(t, y)| (t as f64, y as u64)).collect();
        Self::new(name, points)
    }

    /// Loads a `t,y` CSV. Lines starting with `#` are skipped; errors carry
    /// the offending file line.
    pub fn load_csv(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let io_err = |source| Error::Io {
            path: path.to_path_buf(),
            source,
        };
        let file = std::fs::File::open(path).map_err(io_err)?;
        let mut rdr = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(file);
        let csv_err = |line: usize, msg: String| Error::Csv {
            path: path.to_path_buf(),
            line,
            msg,
        };
        {
            let headers = rdr
                .headers()
                .map_err(|e| csv_err(1, e.to_string()))?;
            if headers.len() != 2 || &headers[0] != "t" || &headers[1] != "y" {
                return Err(csv_err(
                    1,
                    format!("expected header \"t,y\", got {:?}", headers.iter().collect::<Vec<_>>().join(",")),
                ));
            }
        }
        let mut points = Vec::new();
        let mut lines = Vec::new();
        for rec in rdr.records() {
            let rec = rec.map_err(|e| {
                let line = e
                    .position()
                    .map(|p| p.line() as usize)
                    .unwrap_or(0);
                csv_err(line, e.to_string())
            })?;
            let line = rec.position().map(|p| p.line() as usize).unwrap_or(0);
            if rec.len() != 2 {
                return Err(csv_err(line, format!("expected 2 fields, got {}", rec.len())));
            }
            let t: f64 = rec[0]
                .parse()
                .map_err(|_| csv_err(line, format!("malformed time {:?}", &rec[0])))?;
            let y: u64 = rec[1]
                .parse()
                .map_err(|_| csv_err(line, format!("malformed count {:?}", &rec[1])))?;
            points.push((t, y));
            lines.push(line);
        }
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "csv".to_string());
        // Re-map constructor row numbers to file lines.
        Self::new(name, points.clone()).map_err(|e| match e {
            Error::Invalid(msg) => {
                let line = msg
                    .strip_prefix("row ")
                    .and_then(|r| r.split(':').next())
                    .and_then(|n| n.parse::<usize>().ok())
                    .and_then(|row| lines.get(row - 1).copied())
                    .unwrap_or(0);
                csv_err(line, msg)
            }
            other => other,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn points(&self) -> &[(f64, u64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn final_time(&self) -> f64 {
        self.points.last().unwrap().0
    }

    pub fn final_count(&self) -> u64 {
        self.points.last().unwrap().1
    }

    /// CSV serialization; `load_csv` of the output reproduces the dataset.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,y\n");
        for &(t, y) in &self.points {
            out.push_str(&format!("{t},{y}\n"));
        }
        out
    }

    /// Per-defect interfailure gaps: defect j is assigned the first
    /// observation time with y >= j, and gaps are successive differences of
    /// those occurrence times (first element = first occurrence time).
    pub fn interfailure_times(&self) -> Vec<f64> {
        let mut gaps = Vec::with_capacity(self.final_count() as usize);
        let mut prev = 0.0;
        let mut j = 1u64;
        for &(t, y) in &self.points {
            while j <= y {
                gaps.push(t - prev);
                prev = t;
                j += 1;
            }
        }
        gaps
    }

    /// The dataset expanded to whole days 1..=ceil(t_n), carrying the last
    /// observed cumulative count across days without an observation. Fitting
    /// and trend statistics run on this timeline.
    pub fn daily_series(&self) -> DailySeries {
        let horizon = self.final_time().ceil() as usize;
        let mut t = Vec::with_capacity(horizon);
        let mut y = Vec::with_capacity(horizon);
        let mut cur = 0.0;
        let mut idx = 0;
        for day in 1..=horizon {
            while idx < self.points.len() && self.points[idx].0 <= day as f64 {
                cur = self.points[idx].1 as f64;
                idx += 1;
            }
            t.push(day as f64);
            y.push(cur);
        }
        DailySeries { t, y }
    }
}

/// Day-indexed cumulative counts produced by [`DefectDataset::daily_series`].
#[derive(Debug, Clone, PartialEq)]
pub struct DailySeries {
    pub t: Vec<f64>,
    pub y: Vec<f64>,
}

impl DailySeries {
    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// New defects per day: first differences of the cumulative counts.
    pub fn new_counts(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.y.len());
        let mut prev = 0.0;
        for &v in &self.y {
            out.push(v - prev);
            prev = v;
        }
        out
    }
}
