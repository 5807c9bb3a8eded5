//! Particle swarm: inertia 0.729, cognitive/social 1.49445, velocity
//! clamped to half the box width per dimension.
//!
//! Two additions to the textbook loop, both needed on this objective's
//! boundary-hugging landscape: a turbulence kick proportional to |x| that
//! decays to zero over the first half of the budget, and velocity zeroing on
//! the dimensions a particle left the box in (it re-enters clamped instead
//! of pressing against the wall).

use super::{argmin, Ctx};

pub(crate) struct State {
    v: Vec<Vec<f64>>,
    pb: Vec<Vec<f64>>,
    pf: Vec<f64>,
}

impl State {
    pub(crate) fn new(x: &[Vec<f64>], f: &[f64]) -> Self {
        State {
            v: x.iter().map(|xi| vec![0.0; xi.len()]).collect(),
            pb: x.to_vec(),
            pf: f.to_vec(),
        }
    }
}

const INERTIA: f64 = 0.729;
const ACCEL: f64 = 1.49445;

pub(crate) fn step<F: Fn(&[f64]) -> f64>(
    c: &mut Ctx<F>,
    x: &mut [Vec<f64>],
    f: &mut [f64],
    it: usize,
    iters: usize,
    st: &mut State,
) {
    let dim = c.dim;
    let tau = 0.1 * (1.0 - 2.0 * it as f64 / iters as f64).max(0.0);
    let gb_idx = argmin(&st.pf);
    for i in 0..c.pop {
        let r1 = c.rand_vec();
        let r2 = c.rand_vec();
        // The leader is re-read each agent: if it improves its own personal
        // best mid-generation, later agents follow the newer point.
        let gb = st.pb[gb_idx].clone();
        let mut v = vec![0.0; dim];
        for d in 0..dim {
            v[d] = INERTIA * st.v[i][d]
                + ACCEL * r1[d] * (st.pb[i][d] - x[i][d])
                + ACCEL * r2[d] * (gb[d] - x[i][d]);
        }
        if tau > 0.0 {
            let r3 = c.rand_vec();
            for d in 0..dim {
                v[d] += tau * (r3[d] - 0.5) * x[i][d].abs();
            }
        }
        for d in 0..dim {
            let vmax = 0.5 * c.span[d];
            v[d] = v[d].clamp(-vmax, vmax);
            let xn = x[i][d] + v[d];
            let out = xn < c.lo[d] || xn > c.hi[d];
            x[i][d] = xn.clamp(c.lo[d], c.hi[d]);
            st.v[i][d] = if out { 0.0 } else { v[d] };
        }
        f[i] = c.evaluate(&x[i]);
        if f[i] < st.pf[i] {
            st.pf[i] = f[i];
            st.pb[i] = x[i].clone();
        }
    }
}
