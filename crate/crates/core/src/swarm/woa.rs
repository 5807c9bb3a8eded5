//! Whale: 50/50 split between encircling (shrinking a in [2,0]) and a
//! logarithmic spiral around the best-so-far, spiral constant b=1. When the
//! encircling coefficient is large the agent chases a random whale instead
//! of the leader.

use std::f64::consts::PI;

use super::Ctx;

pub(crate) fn step<F: Fn(&[f64]) -> f64>(
    c: &mut Ctx<F>,
    x: &mut [Vec<f64>],
    f: &mut [f64],
    it: usize,
    iters: usize,
) {
    let dim = c.dim;
    let a = 2.0 - 2.0 * it as f64 / iters as f64;
    let a2 = -1.0 - it as f64 / iters as f64;
    // Leader frozen to the generation-start best.
    let best = c.best_x.clone();
    for i in 0..c.pop {
        let mut xn = vec![0.0; dim];
        if c.rand() < 0.5 {
            let ra = c.rand_vec();
            let rc = c.rand_vec();
            let a_vec: Vec<f64> = ra.iter().map(|&r| 2.0 * a * r - a).collect();
            let max_a = a_vec.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
            let target: Vec<f64> = if max_a < 1.0 {
                best.clone()
            } else {
                x[c.rand_index(c.pop)].clone()
            };
            for d in 0..dim {
                xn[d] = target[d] - a_vec[d] * (2.0 * rc[d] * target[d] - x[i][d]).abs();
            }
        } else {
            let l = (a2 - 1.0) * c.rand() + 1.0;
            let swirl = l.exp() * (2.0 * PI * l).cos();
            for d in 0..dim {
                xn[d] = (best[d] - x[i][d]).abs() * swirl + best[d];
            }
        }
        c.repair(&mut xn);
        x[i] = xn;
        f[i] = c.evaluate(&x[i]);
    }
}
