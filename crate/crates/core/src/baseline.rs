//! Deterministic reference fit: profile out `a` in closed form, scan `b`.
//!
//! For fixed b the squared-error objective is quadratic in a, minimized at
//! a* = sum(f_i y_i) / sum(f_i^2) with f_i = 1 - exp(-b t_i). A grid scan
//! over b with bracket refinement around the best sample then pins the
//! optimum without any stochastic search.

use crate::dataset::DefectDataset;
use crate::error::{Error, Result};
use crate::model::{sse_raw, FitResult, GoParams};

/// (b, a*, sse) samples of the profiled objective, in scan order.
#[derive(Debug, Clone)]
pub struct ProfileCurve {
    pub samples: Vec<(f64, f64, f64)>,
}

fn profile_a_rows(b: f64, t: &[f64], y: &[f64]) -> Result<f64> {
    if !b.is_finite() || b <= 0.0 {
        return Err(Error::invalid(format!("profile requires b > 0, got {b}")));
    }
    let mut num = 0.0;
    let mut den = 0.0;
    for (&ti, &yi) in t.iter().zip(y) {
        let f = 1.0 - (-b * ti).exp();
        num += f * yi;
        den += f * f;
    }
    if den <= 0.0 {
        return Err(Error::degenerate(format!(
            "profile normal equation vanished at b={b}"
        )));
    }
    Ok(num / den)
}

/// Closed-form minimizer of the fit objective in `a` at fixed `b`, on the
/// dataset's daily timeline.
pub fn profile_a(b: f64, d: &DefectDataset) -> Result<f64> {
    let s = d.daily_series();
    profile_a_rows(b, &s.t, &s.y)
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(move |i| if i == n - 1 { hi } else { lo + i as f64 * step })
}

/// Samples the profiled objective at `grid` evenly spaced b values.
pub fn profile_curve(d: &DefectDataset, b_lo: f64, b_hi: f64, grid: usize) -> Result<ProfileCurve> {
    check_domain(b_lo, b_hi)?;
    if grid < 2 {
        return Err(Error::invalid(format!("grid must be >= 2, got {grid}")));
    }
    let s = d.daily_series();
    let mut samples = Vec::with_capacity(grid);
    for b in linspace(b_lo, b_hi, grid) {
        let a = profile_a_rows(b, &s.t, &s.y)?;
        samples.push((b, a, sse_raw(a, b, &s.t, &s.y)));
    }
    Ok(ProfileCurve { samples })
}

fn check_domain(b_lo: f64, b_hi: f64) -> Result<()> {
    if !b_lo.is_finite() || !b_hi.is_finite() || b_lo <= 0.0 || b_hi <= b_lo {
        return Err(Error::invalid(format!(
            "b range must satisfy 0 < b_lo < b_hi, got [{b_lo}, {b_hi}]"
        )));
    }
    Ok(())
}

/// Grid scan over b with `refinements` bracket passes around the best sample.
/// Each pass re-scans [b* - spacing, b* + spacing] (clamped to the original
/// range) at the same grid resolution.
pub fn oracle_fit(
    d: &DefectDataset,
    b_lo: f64,
    b_hi: f64,
    grid: usize,
    refinements: usize,
) -> Result<FitResult> {
    check_domain(b_lo, b_hi)?;
    if grid < 100 {
        return Err(Error::invalid(format!("grid must be >= 100, got {grid}")));
    }
    if refinements < 2 {
        return Err(Error::invalid(format!(
            "refinements must be >= 2, got {refinements}"
        )));
    }
    if d.final_count() == 0 {
        return Err(Error::degenerate("dataset has no defects to fit"));
    }

    let s = d.daily_series();
    let scan = |lo: f64, hi: f64| -> Result<(f64, f64, f64)> {
        let mut best = (f64::NAN, f64::NAN, f64::INFINITY);
        for b in linspace(lo, hi, grid) {
            let a = profile_a_rows(b, &s.t, &s.y)?;
            let sse = sse_raw(a, b, &s.t, &s.y);
            if sse < best.2 {
                best = (b, a, sse);
            }
        }
        Ok(best)
    };

    let (mut lo, mut hi) = (b_lo, b_hi);
    let mut best = scan(lo, hi)?;
    for _ in 0..refinements {
        let spacing = (hi - lo) / (grid - 1) as f64;
        lo = (best.0 - spacing).max(b_lo);
        hi = (best.0 + spacing).min(b_hi);
        let refined = scan(lo, hi)?;
        if refined.2 < best.2 {
            best = refined;
        }
    }

    Ok(FitResult {
        params: GoParams::new(best.1, best.0)?,
        sse: best.2,
        source: "oracle".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic() -> DefectDataset {
        let p = GoParams::new(40.0, 0.05).unwrap();
        let pts: Vec<(f64, u64)> = (1..=60)
            .map(|d| (d as f64, p.mvf(d as f64).round() as u64))
            .collect();
        DefectDataset::new("synthetic", pts).unwrap()
    }

    #[test]
    fn saturated_single_row_profile_returns_count() {
        // With b t large, f ~ 1 and a* equals the observed count exactly.
        assert_eq!(profile_a_rows(0.5, &[100.0], &[7.0]).unwrap(), 7.0);
    }

    #[test]
    fn profile_beats_random_a() {
        use rand::{Rng, SeedableRng};
        let d = DefectDataset::builtin("apache-2.0.36").unwrap();
        let s = d.daily_series();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &b in &[0.01, 0.039, 0.2, 0.9] {
            let a_star = profile_a(b, &d).unwrap();
            let best = sse_raw(a_star, b, &s.t, &s.y);
            for _ in 0..1000 {
                let a: f64 = rng.gen_range(1.0..500.0);
                assert!(sse_raw(a, b, &s.t, &s.y) >= best - 1e-9);
            }
        }
    }

    #[test]
    fn oracle_matches_reference_apache_2_0_36() {
        let d = DefectDataset::builtin("apache-2.0.36").unwrap();
        let r = oracle_fit(&d, 1e-4, 1.0, 1000, 4).unwrap();
        assert!((r.params.a - 52.3159762058).abs() < 1e-4, "a={}", r.params.a);
        assert!((r.params.b - 0.039336942228).abs() < 1e-6, "b={}", r.params.b);
        assert!((r.sse - 910.6996871355).abs() < 1e-4, "sse={}", r.sse);
        assert_eq!(r.source, "oracle");
    }

    #[test]
    fn oracle_matches_reference_apache_2_0_39() {
        let d = DefectDataset::builtin("apache-2.0.39").unwrap();
        let r = oracle_fit(&d, 1e-4, 1.0, 1000, 4).unwrap();
        assert!((r.params.a - 58.3825448331).abs() < 1e-4, "a={}", r.params.a);
        assert!((r.params.b - 0.036706935396).abs() < 1e-6, "b={}", r.params.b);
        assert!((r.sse - 420.9959946533).abs() < 1e-4, "sse={}", r.sse);
    }

    #[test]
    fn oracle_recovers_synthetic_parameters() {
        let r = oracle_fit(&synthetic(), 1e-4, 1.0, 1000, 4).unwrap();
        assert!((r.params.a - 40.0564325152).abs() < 1e-4, "a={}", r.params.a);
        assert!((r.params.b - 0.049995137985).abs() < 1e-6, "b={}", r.params.b);
        assert!((r.sse - 4.3620053501).abs() < 1e-4, "sse={}", r.sse);
    }

    #[test]
    fn oracle_is_deterministic_and_dominates_scan() {
        let d = DefectDataset::builtin("apache-2.0.39").unwrap();
        let r1 = oracle_fit(&d, 1e-4, 1.0, 200, 2).unwrap();
        let r2 = oracle_fit(&d, 1e-4, 1.0, 200, 2).unwrap();
        assert_eq!(r1.params.a.to_bits(), r2.params.a.to_bits());
        assert_eq!(r1.params.b.to_bits(), r2.params.b.to_bits());
        assert_eq!(r1.sse.to_bits(), r2.sse.to_bits());

        let curve = profile_curve(&d, 1e-4, 1.0, 200).unwrap();
        assert_eq!(curve.samples.len(), 200);
        let scan_min = curve
            .samples
            .iter()
            .map(|s| s.2)
            .fold(f64::INFINITY, f64::min);
        assert!(r1.sse <= scan_min + 1e-12);
        assert_eq!(curve.samples[0].0, 1e-4);
        assert_eq!(curve.samples.last().unwrap().0, 1.0);
    }

    #[test]
    fn oracle_validates_arguments() {
        let d = DefectDataset::builtin("apache-2.0.36").unwrap();
        assert!(oracle_fit(&d, 0.0, 1.0, 1000, 4).is_err());
        assert!(oracle_fit(&d, 0.5, 0.1, 1000, 4).is_err());
        assert!(oracle_fit(&d, 1e-4, 1.0, 99, 4).is_err());
        assert!(oracle_fit(&d, 1e-4, 1.0, 1000, 1).is_err());
        assert!(profile_a(-1.0, &d).is_err());
        assert!(profile_curve(&d, 1e-4, 1.0, 1).is_err());
    }
}
