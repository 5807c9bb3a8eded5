//! Goel-Okumoto NHPP model functions and the SSE fitting objective.

use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use crate::dataset::{DailySeries, DefectDataset};
use crate::error::{Error, Result};

/// Model parameters: `a` is the expected total defect content, `b` the
/// per-defect detection rate (1/day). Both strictly positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GoParams {
    pub a: f64,
    pub b: f64,
}

impl GoParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0) {
            return Err(Error::invalid(format!(
                "model parameters must be positive finite, got a={a}, b={b}"
            )));
        }
        Ok(GoParams { a, b })
    }

    /// Mean value function: expected cumulative defects by time `t`,
    /// `a (1 - exp(-b t))`. Requires `t >= 0`.
    pub fn mvf(&self, t: f64) -> f64 {
        assert!(t >= 0.0, "mvf is defined for t >= 0, got {t}");
        self.a * (1.0 - (-(self.b * t)).exp())
    }

    /// Defect intensity `a b exp(-b t)`, the derivative of [`GoParams::mvf`].
    pub fn intensity(&self, t: f64) -> f64 {
        assert!(t >= 0.0, "intensity is defined for t >= 0, got {t}");
        self.a * self.b * (-(self.b * t)).exp()
    }

    /// Probability of observing exactly `count` defects by time `t`, i.e. the
    /// Poisson pmf with mean `mvf(t)`, evaluated in log space.
    pub fn nhpp_pmf(&self, t: f64, count: u64) -> f64 {
        let m = self.mvf(t);
        if m == 0.0 {
            return if count == 0 { 1.0 } else { 0.0 };
        }
        let k = count as f64;
        (k * m.ln() - m - ln_gamma(k + 1.0)).exp()
    }
}

/// One fitted model: parameters, objective value, and the producer's id
/// ("oracle" or an optimizer id).
#[derive(Debug, Clone, Serialize)]
pub struct FitResult {
    pub params: GoParams,
    pub sse: f64,
    pub source: String,
}

/// Sum of squared errors of the mean value function against the dataset's
/// daily timeline (cumulative counts carried across observation gaps).
pub fn sse_objective(p: &GoParams, d: &DefectDataset) -> f64 {
    sse_on_series(p, &d.daily_series())
}

/// SSE over an already-expanded series.
pub fn sse_on_series(p: &GoParams, s: &DailySeries) -> f64 {
    sse_raw(p.a, p.b, &s.t, &s.y)
}

/// SSE at raw `(a, b)` over paired time/count slices. The workhorse for
/// optimizers, which probe positions that may not satisfy `GoParams`
/// invariants; non-finite inputs yield a non-finite result the caller maps
/// to +inf.
pub fn sse_raw(a: f64, b: f64, t: &[f64], y: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (&ti, &yi) in t.iter().zip(y) {
        let r = a * (1.0 - (-b * ti).exp()) - yi;
        acc += r * r;
    }
    acc
}
